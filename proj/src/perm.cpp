#include "hgk/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hgk {

namespace {

constexpr unsigned kMaxDegree = 255;

}  // namespace

Perm::Perm(unsigned degree) : images_(degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw ValidationError("permutation degree must be in 1.." + std::to_string(kMaxDegree));
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree)
    throw ValidationError("permutation degree must be in 1.." + std::to_string(kMaxDegree));
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw ValidationError("image sequence is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::parse(std::string_view text, unsigned degree) {
  Perm result(degree);
  std::vector<std::uint8_t>& img = result.images_;
  std::vector<bool> moved(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle notation");
      unsigned v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (moved[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated");
      moved[v - 1] = true;
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return result;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw ValidationError("degree mismatch in composition");
  std::vector<std::uint8_t> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = images_[rhs.images_[i]];
  Perm out(1);
  out.images_ = std::move(img);
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<std::uint8_t>(i);
  Perm out(1);
  out.images_ = std::move(img);
  return out;
}

Perm Perm::conjugated_by(const Perm& g) const { return g * (*this) * g.inverse(); }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

unsigned Perm::order() const {
  unsigned result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

unsigned Perm::fixed_point_count() const {
  unsigned n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

bool Perm::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  unsigned parity = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    parity ^= (len - 1) & 1u;
  }
  return parity == 0;
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << (j + 1);
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace hgk
