// Embedded group catalogs. Generated by scripts/gen_catalog_data.py;
// do not edit by hand.
#include "hgk/groupid.hpp"

namespace hgk::detail {

const RawCatalogEntry kSmallGroups[] = {
    {"C1", 1, 1, "()"},
    {"C2", 2, 2, "(1,2)"},
    {"C3", 3, 3, "(1,2,3)"},
    {"C4", 4, 4, "(1,2,3,4)"},
    {"V4", 4, 4, "(1,2)(3,4);(1,3)(2,4)"},
    {"C5", 5, 5, "(1,2,3,4,5)"},
    {"C6", 5, 6, "(1,2)(3,4,5)"},
    {"S3", 3, 6, "(1,2,3);(1,2)"},
    {"C7", 7, 7, "(1,2,3,4,5,6,7)"},
    {"C8", 8, 8, "(1,2,3,4,5,6,7,8)"},
    {"C4xC2", 6, 8, "(1,2,3,4);(5,6)"},
    {"C2xC2xC2", 6, 8, "(1,2);(3,4);(5,6)"},
    {"D_{2·4}", 4, 8, "(1,2,3,4);(2,4)"},
    {"Q8", 8, 8, "(1,3,2,4)(5,7,6,8);(1,5,2,6)(3,8,4,7)"},
    {"C9", 9, 9, "(1,2,3,4,5,6,7,8,9)"},
    {"C3xC3", 6, 9, "(1,2,3);(4,5,6)"},
    {"C10", 7, 10, "(1,2)(3,4,5,6,7)"},
    {"D_{2·5}", 5, 10, "(1,2,3,4,5);(2,5)(3,4)"},
    {"C11", 11, 11, "(1,2,3,4,5,6,7,8,9,10,11)"},
    {"C12", 7, 12, "(1,2,3,4)(5,6,7)"},
    {"C2xC6", 7, 12, "(1,2);(3,4)(5,6,7)"},
    {"D_{2·6}", 6, 12, "(1,2,3,4,5,6);(2,6)(3,5)"},
    {"A4", 4, 12, "(1,2,3);(2,3,4)"},
    {"Dic3", 7, 12, "(1,2,3);(2,3)(4,5,6,7)"},
    {"C13", 13, 13, "(1,2,3,4,5,6,7,8,9,10,11,12,13)"},
    {"C14", 9, 14, "(1,2)(3,4,5,6,7,8,9)"},
    {"D_{2·7}", 7, 14, "(1,2,3,4,5,6,7);(2,7)(3,6)(4,5)"},
    {"C15", 8, 15, "(1,2,3)(4,5,6,7,8)"},
    {"C16", 16, 16, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)"},
    {"C8xC2", 10, 16, "(1,2,3,4,5,6,7,8);(9,10)"},
    {"C4xC4", 8, 16, "(1,2,3,4);(5,6,7,8)"},
    {"C4xC2xC2", 8, 16, "(1,2,3,4);(5,6);(7,8)"},
    {"C2xC2xC2xC2", 8, 16, "(1,2);(3,4);(5,6);(7,8)"},
    {"D_{2·8}", 8, 16, "(1,2,3,4,5,6,7,8);(2,8)(3,7)(4,6)"},
    {"SD16", 8, 16, "(1,2,3,4,5,6,7,8);(2,4)(3,7)(6,8)"},
    {"M16", 8, 16, "(1,2,3,4,5,6,7,8);(2,6)(4,8)"},
    {"Q16", 16, 16, "(1,3,5,7,9,11,13,15)(2,4,6,8,10,12,14,16);(1,2,9,10)(3,16,11,8)(4,7,12,15)(5,14,13,6)"},
    {"D8xC2", 6, 16, "(1,2,3,4);(2,4);(5,6)"},
    {"Q8xC2", 10, 16, "(1,3,2,4)(5,7,6,8);(1,5,2,6)(3,8,4,7);(9,10)"},
    {"C4:C4", 8, 16, "(1,2,3,4);(2,4)(5,6,7,8)"},
    {"(C2xC2):C4", 8, 16, "(1,2);(1,3)(2,4)(5,6,7,8)"},
    {"D8*C4", 16, 16, "(1,9,3,11)(2,10,4,12)(5,13,7,15)(6,14,8,16);(1,5)(2,6)(3,7)(4,8)(9,15)(10,16)(11,13)(12,14);(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)"},
    {"C18", 11, 18, "(1,2)(3,4,5,6,7,8,9,10,11)"},
    {"C3xC6", 8, 18, "(1,2,3);(4,5)(6,7,8)"},
    {"D_{2·9}", 9, 18, "(1,2,3,4,5,6,7,8,9);(2,9)(3,8)(4,7)(5,6)"},
    {"C3xS3", 6, 18, "(1,2,3);(4,5,6);(4,5)"},
    {"(C3xC3):C2", 6, 18, "(1,2,3);(4,5,6);(2,3)(5,6)"},
    {"C20", 9, 20, "(1,2,3,4)(5,6,7,8,9)"},
    {"C2xC10", 9, 20, "(1,2);(3,4)(5,6,7,8,9)"},
    {"D_{2·10}", 10, 20, "(1,2,3,4,5,6,7,8,9,10);(2,10)(3,9)(4,8)(5,7)"},
    {"Dic5", 9, 20, "(1,2,3,4,5);(2,5)(3,4)(6,7,8,9)"},
    {"F20", 5, 20, "(1,2,3,4,5);(2,3,5,4)"},
    {"C21", 10, 21, "(1,2,3)(4,5,6,7,8,9,10)"},
    {"F21", 7, 21, "(1,2,3,4,5,6,7);(2,3,5)(4,7,6)"},
    {"C24", 11, 24, "(1,2,3,4,5,6,7,8)(9,10,11)"},
    {"C12xC2", 9, 24, "(1,2,3,4)(5,6,7);(8,9)"},
    {"C6xC2xC2", 9, 24, "(1,2)(3,4,5);(6,7);(8,9)"},
    {"C3:C8", 11, 24, "(1,2,3);(2,3)(4,5,6,7,8,9,10,11)"},
    {"SL(2,3)", 8, 24, "(1,3,2,4)(5,7,6,8);(1,5,2,6)(3,8,4,7);(3,5,7)(4,6,8)"},
    {"Dic6", 11, 24, "(1,2,3);(4,6,5,7)(8,10,9,11);(2,3)(4,8,5,9)(6,11,7,10)"},
    {"C4xS3", 7, 24, "(1,2,3,4);(5,6,7);(5,6)"},
    {"D_{2·12}", 12, 24, "(1,2,3,4,5,6,7,8,9,10,11,12);(2,12)(3,11)(4,10)(5,9)(6,8)"},
    {"C2xDic3", 9, 24, "(1,2);(3,4,5);(4,5)(6,7,8,9)"},
    {"C3:D8", 7, 24, "(1,2,3);(2,3)(4,5,6,7);(2,3)(5,7)"},
    {"C3xD8", 7, 24, "(1,2,3);(4,5,6,7);(5,7)"},
    {"C3xQ8", 11, 24, "(1,2,3);(4,6,5,7)(8,10,9,11);(4,8,5,9)(6,11,7,10)"},
    {"S4", 4, 24, "(1,2,3,4);(1,2)"},
    {"C2xA4", 6, 24, "(1,2);(3,4,5);(4,5,6)"},
    {"C2xC2xS3", 7, 24, "(1,2);(3,4);(5,6,7);(5,6)"},
    {"C30", 10, 30, "(1,2)(3,4,5)(6,7,8,9,10)"},
    {"D_{2·15}", 15, 30, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15);(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)"},
    {"C3xD_{2·5}", 8, 30, "(1,2,3);(4,5,6,7,8);(5,8)(6,7)"},
    {"C5xS3", 8, 30, "(1,2,3,4,5);(6,7,8);(6,7)"},
    {"C40", 13, 40, "(1,2,3,4,5,6,7,8)(9,10,11,12,13)"},
    {"C20xC2", 11, 40, "(1,2,3,4)(5,6,7,8,9);(10,11)"},
    {"C10xC2xC2", 11, 40, "(1,2)(3,4,5,6,7);(8,9);(10,11)"},
    {"D_{2·20}", 20, 40, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20);(2,20)(3,19)(4,18)(5,17)(6,16)(7,15)(8,14)(9,13)(10,12)"},
    {"Dic10", 13, 40, "(1,2,3,4,5);(6,8,7,9)(10,12,11,13);(2,5)(3,4)(6,10,7,11)(8,13,9,12)"},
    {"C5:C8(4)", 13, 40, "(1,2,3,4,5);(2,3,5,4)(6,7,8,9,10,11,12,13)"},
    {"C5:C8(2)", 13, 40, "(1,2,3,4,5);(2,5)(3,4)(6,7,8,9,10,11,12,13)"},
    {"C2xDic5", 11, 40, "(1,2);(3,4,5,6,7);(4,7)(5,6)(8,9,10,11)"},
    {"C2xF20", 7, 40, "(1,2);(3,4,5,6,7);(4,5,7,6)"},
    {"C4xD_{2·5}", 9, 40, "(1,2,3,4);(5,6,7,8,9);(6,9)(7,8)"},
    {"C2xC2xD_{2·5}", 9, 40, "(1,2);(3,4);(5,6,7,8,9);(6,9)(7,8)"},
    {"C5xD8", 9, 40, "(1,2,3,4,5);(6,7,8,9);(7,9)"},
    {"C5xQ8", 13, 40, "(1,2,3,4,5);(6,8,7,9)(10,12,11,13);(6,10,7,11)(8,13,9,12)"},
    {"C5:D8", 9, 40, "(1,2,3,4,5);(2,5)(3,4)(6,7,8,9);(2,5)(3,4)(7,9)"},
    {"C60", 12, 60, "(1,2,3,4)(5,6,7)(8,9,10,11,12)"},
    {"C2xC30", 12, 60, "(1,2);(3,4)(5,6,7)(8,9,10,11,12)"},
    {"A5", 5, 60, "(1,2,3);(1,2,3,4,5)"},
    {"D_{2·30}", 30, 60, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30);(2,30)(3,29)(4,28)(5,27)(6,26)(7,25)(8,24)(9,23)(10,22)(11,21)(12,20)(13,19)(14,18)(15,17)"},
    {"Dic15", 19, 60, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15);(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)(16,17,18,19)"},
    {"C15:C4", 12, 60, "(1,2,3)(4,5,6,7,8);(2,3)(5,6,8,7)(9,10,11,12)"},
    {"C3xF20", 8, 60, "(1,2,3);(4,5,6,7,8);(5,6,8,7)"},
    {"C5xA4", 9, 60, "(1,2,3,4,5);(6,7,8);(7,8,9)"},
    {"S3xD_{2·5}", 8, 60, "(1,2,3);(1,2);(4,5,6,7,8);(5,8)(6,7)"},
    {"C6xD_{2·5}", 10, 60, "(1,2)(3,4,5);(6,7,8,9,10);(7,10)(8,9)"},
    {"C10xS3", 10, 60, "(1,2)(3,4,5,6,7);(8,9,10);(8,9)"},
    {"C5xDic3", 12, 60, "(1,2,3,4,5);(6,7,8);(7,8)(9,10,11,12)"},
    {"C3xDic5", 12, 60, "(1,2,3);(4,5,6,7,8);(5,8)(6,7)(9,10,11,12)"},
};
const std::size_t kSmallGroupCount = sizeof(kSmallGroups) / sizeof(kSmallGroups[0]);

const RawCatalogEntry kTransitiveGroups[] = {
    {"C2", 2, 2, "(1,2)"},
    {"C3", 3, 3, "(1,2,3)"},
    {"S3", 3, 6, "(1,2,3);(1,2)"},
    {"C4", 4, 4, "(1,2,3,4)"},
    {"V4", 4, 4, "(1,2)(3,4);(1,3)(2,4)"},
    {"D_{2·4}", 4, 8, "(1,2,3,4);(2,4)"},
    {"A4", 4, 12, "(1,2,3);(2,3,4)"},
    {"S4", 4, 24, "(1,2,3,4);(1,2)"},
    {"C5", 5, 5, "(1,2,3,4,5)"},
    {"D_{2·5}", 5, 10, "(1,2,3,4,5);(2,5)(3,4)"},
    {"F20", 5, 20, "(1,2,3,4,5);(2,3,5,4)"},
    {"A5", 5, 60, "(1,2,3);(1,2,3,4,5)"},
    {"S5", 5, 120, "(1,2,3,4,5);(1,2)"},
    {"C6", 6, 6, "(1,2,3,4,5,6)"},
    {"S3", 6, 6, "(1,4,5)(2,3,6);(1,3)(2,4)(5,6)"},
    {"D_{2·6}", 6, 12, "(1,2,3,4,5,6);(2,6)(3,5)"},
    {"A4", 6, 12, "(1,4,2)(3,5,6);(1,2,3)(4,6,5)"},
    {"F18", 6, 18, "(1,2,3);(1,4)(2,5)(3,6)"},
    {"2A4", 6, 24, "(1,2);(1,3,5)(2,4,6)"},
    {"S4(6d)", 6, 24, "(1,4,6,3)(2,5);(2,4)(3,5)"},
    {"S4(6c)", 6, 24, "(2,5,4,3);(1,4)(2,6)(3,5)"},
    {"F_{18}:2", 6, 36, "(1,4,5)(2,3,6);(1,3)(2,4)(5,6);(2,6)(4,5);(2,6,3)"},
    {"F36", 6, 36, "(2,5,6);(1,2)(3,6,4,5)"},
    {"2S4", 6, 48, "(1,2);(1,3,5)(2,4,6);(3,5)(4,6)"},
    {"A5", 6, 60, "(2,3,4,5,6);(1,2)(3,6)"},
    {"F_{36}:2", 6, 72, "(1,2,3);(1,2);(1,4)(2,5)(3,6)"},
    {"S5", 6, 120, "(2,3,4,5,6);(1,2)(3,6);(3,4,6,5)"},
    {"A6", 6, 360, "(1,2,3);(2,3,4,5,6)"},
    {"S6", 6, 720, "(1,2,3,4,5,6);(1,2)"},
    {"C7", 7, 7, "(1,2,3,4,5,6,7)"},
    {"D_{2·7}", 7, 14, "(1,2,3,4,5,6,7);(2,7)(3,6)(4,5)"},
    {"F21", 7, 21, "(1,2,3,4,5,6,7);(2,3,5)(4,7,6)"},
    {"F42", 7, 42, "(1,2,3,4,5,6,7);(2,4,3,7,5,6)"},
    {"PSL(2,7)", 7, 168, "(1,4,2,5,6,7,3);(2,3)(6,7)"},
    {"A7", 7, 2520, "(1,2,3);(1,2,3,4,5,6,7)"},
    {"S7", 7, 5040, "(1,2,3,4,5,6,7);(1,2)"},
    {"C11", 11, 11, "(1,2,3,4,5,6,7,8,9,10,11)"},
    {"D_{2·11}", 11, 22, "(1,2,3,4,5,6,7,8,9,10,11);(2,11)(3,10)(4,9)(5,8)(6,7)"},
    {"F55", 11, 55, "(1,2,3,4,5,6,7,8,9,10,11);(2,4,10,6,5)(3,7,8,11,9)"},
    {"F110", 11, 110, "(1,2,3,4,5,6,7,8,9,10,11);(2,3,5,9,6,11,10,8,4,7)"},
    {"PSL(2,11)", 11, 660, "(1,2,11,3,8,7,4,10,6,9,5);(1,2)(3,5)(6,9)(8,10)"},
    {"M11", 11, 7920, ""},
    {"A11", 11, 19958400, ""},
    {"S11", 11, 39916800, ""},
};
const std::size_t kTransitiveGroupCount = sizeof(kTransitiveGroups) / sizeof(kTransitiveGroups[0]);

}  // namespace hgk::detail
