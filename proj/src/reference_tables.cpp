#include "tautilt/reference_tables.hpp"

namespace tautilt {

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {Family::TLin,
         "tau-tilting modules, linear",
         {{
             {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
             {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233},
             {1, 2, 5, 9, 18, 37, 73, 146, 293, 585, 1170, 2341},
             {1, 2, 5, 14, 28, 62, 143, 331, 738, 1665, 3780, 8576},
             {1, 2, 5, 14, 42, 90, 213, 527, 1326, 3317, 8022, 19608},
             {1, 2, 5, 14, 42, 132, 297, 737, 1914, 5081, 13566, 35862},
         }}},
        {Family::SLin,
         "support tau-tilting modules, linear",
         {{
             {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096},
             {2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741, 13860, 33461},
             {2, 5, 14, 37, 98, 261, 694, 1845, 4906, 13045, 34686, 92229},
             {2, 5, 14, 42, 118, 331, 934, 2645, 7476, 21120, 59676, 168649},
             {2, 5, 14, 42, 132, 387, 1130, 3317, 9786, 28932, 85352, 251613},
             {2, 5, 14, 42, 132, 429, 1298, 3905, 11802, 35862, 109376, 333933},
         }}},
        {Family::TCyc,
         "tau-tilting modules, cyclic",
         {{
             {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
             {1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322},
             {1, 3, 10, 15, 31, 66, 127, 255, 514, 1023, 2047, 4098},
             {1, 3, 10, 35, 56, 126, 302, 715, 1549, 3498, 7897, 18158},
             {1, 3, 10, 35, 126, 210, 498, 1275, 3313, 8398, 19691, 48062},
             {1, 3, 10, 35, 126, 462, 792, 1947, 5203, 14278, 39095, 104006},
         }}},
        {Family::SCyc,
         "support tau-tilting modules, cyclic",
         {{
             {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096},
             {2, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726, 16238, 39202},
             {2, 6, 20, 50, 132, 354, 940, 2498, 6644, 17666, 46972, 124898},
             {2, 6, 20, 70, 182, 504, 1430, 4078, 11504, 32466, 91742, 259348},
             {2, 6, 20, 70, 252, 672, 1920, 5646, 16796, 49966, 147028, 432724},
             {2, 6, 20, 70, 252, 924, 2508, 7326, 22088, 67606, 208012, 638356},
         }}},
    };
    return tables;
}

std::span<const ReferenceErratum> reference_errata() {
    // The neighbouring cells, the cyclic recurrence and the support table
    // (s_cyc(4, 11) - ps_cyc(4, 11) = 7987) all require 7987; the printed
    // value has two digits swapped.
    static const ReferenceErratum errata[] = {
        {Family::TCyc, 4, 11, 7897, 7987},
    };
    return errata;
}

}  // namespace tautilt
