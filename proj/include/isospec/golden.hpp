#pragma once

// Embedded reference values for the reproduction command and the acceptance
// suite: the published partition table, the 2O/2I class data, the outer
// involution actions, the 2O/{+-1} action table, the SO(6) code pair, and
// the exact volume/Gaussian pins.

#include <array>
#include <string>
#include <vector>

namespace isospec::golden {

struct PartitionRow {
    int m;
    std::vector<int> partition;
    long long n;
};

// The published table of admissible partitions (one row per printed entry).
inline const std::vector<PartitionRow>& partition_table() {
    static const std::vector<PartitionRow> rows = {
        {6, {3, 2, 1}, 16},
        {8, {4, 1, 1, 1, 1}, 35},
        {8, {5, 2, 1}, 64},
        {10, {2, 2, 1, 1, 1, 1, 1, 1}, 35},
        {10, {3, 2, 1, 1, 1, 1, 1}, 160},
        {10, {7, 2, 1}, 160},
        {10, {5, 4, 1}, 288},
        {10, {3, 2, 2, 2, 1}, 288},
        {10, {6, 3, 1}, 315},
        {10, {6, 2, 1, 1}, 350},
        {10, {5, 2, 1, 1, 1}, 448},
        {10, {3, 3, 2, 1, 1}, 450},
        {10, {5, 3, 1, 1}, 567},
        {11, {3, 1, 1, 1, 1, 1, 1, 1, 1}, 45},
        {11, {4, 1, 1, 1, 1, 1, 1, 1}, 120},
        {11, {8, 1, 1, 1}, 120},
        {11, {7, 4}, 165},
        {11, {7, 1, 1, 1, 1}, 210},
        {11, {3, 3, 3, 2}, 462},
        {11, {4, 4, 1, 1, 1}, 825},
        {11, {4, 2, 2, 1, 1, 1}, 1232},
        {11, {6, 3, 1, 1}, 1232},
        {11, {4, 4, 2, 1}, 1320},
        {11, {4, 3, 2, 2}, 1320},
        {12, {4, 1, 1, 1, 1, 1, 1, 1, 1}, 165},
        {12, {3, 2, 1, 1, 1, 1, 1, 1, 1}, 320},
        {12, {9, 2, 1}, 320},
        {12, {8, 1, 1, 1, 1}, 330},
        {12, {3, 3, 3, 3}, 462},
        {12, {6, 1, 1, 1, 1, 1, 1}, 462},
        {12, {3, 3, 1, 1, 1, 1, 1, 1}, 616},
        {12, {8, 2, 2}, 616},
        {12, {6, 5, 1}, 1155},
        {12, {5, 5, 2}, 1320},
        {12, {3, 3, 2, 2, 2}, 1320},
        {12, {3, 2, 2, 2, 1, 1, 1}, 1408},
    };
    return rows;
}

// Expected admissible-row counts per m as pinned by the acceptance criteria.
// (The printed table lists 12 rows for m = 12.)
inline int pinned_search_count(int m) {
    switch (m) {
        case 6: return 1;
        case 8: return 2;
        case 10: return 10;
        case 11: return 11;
        case 12: return 13;
    }
    return -1;
}

struct ClassRow {
    std::string real_part;  // canonical rendering
    size_t size;
};

// Conjugacy classes sorted by descending real part, then size.
inline const std::vector<ClassRow>& classes_2o() {
    static const std::vector<ClassRow> rows = {
        {"1", 1},   {"1/2*sqrt(2)", 6},  {"1/2", 8},          {"0", 6},
        {"0", 12},  {"-1/2", 8},         {"-1/2*sqrt(2)", 6}, {"-1", 1}};
    return rows;
}

inline const std::vector<ClassRow>& classes_2i() {
    static const std::vector<ClassRow> rows = {
        {"1", 1},
        {"1/4+1/4*sqrt(5)", 12},
        {"1/2", 20},
        {"-1/4+1/4*sqrt(5)", 12},
        {"0", 30},
        {"1/4-1/4*sqrt(5)", 12},
        {"-1/2", 20},
        {"-1/4-1/4*sqrt(5)", 12},
        {"-1", 1}};
    return rows;
}

struct ActionRow {
    std::string real_part;        // source class key (with size)
    size_t size;
    std::string image_real_part;  // class of the image
    size_t image_size;
};

inline const std::vector<ActionRow>& action_2o() {
    static const std::vector<ActionRow> rows = {
        {"1", 1, "1", 1},
        {"-1", 1, "-1", 1},
        {"1/2", 8, "1/2", 8},
        {"1/2*sqrt(2)", 6, "-1/2*sqrt(2)", 6},
        {"-1/2", 8, "-1/2", 8},
        {"0", 6, "0", 6},
        {"-1/2*sqrt(2)", 6, "1/2*sqrt(2)", 6},
        {"0", 12, "0", 12}};
    return rows;
}

inline const std::vector<ActionRow>& action_2i() {
    static const std::vector<ActionRow> rows = {
        {"1", 1, "1", 1},
        {"-1", 1, "-1", 1},
        {"1/4+1/4*sqrt(5)", 12, "1/4-1/4*sqrt(5)", 12},
        {"-1/4+1/4*sqrt(5)", 12, "-1/4-1/4*sqrt(5)", 12},
        {"1/4-1/4*sqrt(5)", 12, "1/4+1/4*sqrt(5)", 12},
        {"-1/4-1/4*sqrt(5)", 12, "-1/4+1/4*sqrt(5)", 12},
        {"1/2", 20, "1/2", 20},
        {"-1/2", 20, "-1/2", 20},
        {"0", 30, "0", 30}};
    return rows;
}

struct Bd4Row {
    std::string coset;
    std::string image_i, image_j, image_k;
};

inline const std::vector<Bd4Row>& bd4_table() {
    static const std::vector<Bd4Row> rows = {
        {"1", "i", "j", "k"},
        {"i", "i", "-j", "-k"},
        {"j", "-i", "j", "-k"},
        {"k", "-i", "-j", "k"},
        {"1/2+1/2*i+1/2*j+1/2*k", "j", "k", "i"},
        {"1/2-1/2*i-1/2*j-1/2*k", "k", "i", "j"},
        {"1/2+1/2*i-1/2*j-1/2*k", "-j", "k", "-i"},
        {"1/2+1/2*i+1/2*j-1/2*k", "-k", "i", "-j"},
        {"1/2-1/2*i+1/2*j-1/2*k", "-j", "-k", "i"},
        {"1/2-1/2*i-1/2*j+1/2*k", "j", "-k", "-i"},
        {"1/2-1/2*i+1/2*j+1/2*k", "-k", "-i", "j"},
        {"1/2+1/2*i-1/2*j+1/2*k", "k", "-i", "-j"},
        {"1/2*sqrt(2)+1/2*sqrt(2)*i", "i", "k", "-j"},
        {"1/2*sqrt(2)-1/2*sqrt(2)*i", "i", "-k", "j"},
        {"1/2*sqrt(2)*j+1/2*sqrt(2)*k", "-i", "k", "j"},
        {"1/2*sqrt(2)*j-1/2*sqrt(2)*k", "-i", "-k", "-j"},
        {"1/2*sqrt(2)*i+1/2*sqrt(2)*k", "k", "-j", "i"},
        {"1/2*sqrt(2)-1/2*sqrt(2)*k", "-j", "i", "k"},
        {"1/2*sqrt(2)*i-1/2*sqrt(2)*k", "-k", "-j", "-i"},
        {"1/2*sqrt(2)*i+1/2*sqrt(2)*j", "j", "i", "-k"},
        {"1/2*sqrt(2)+1/2*sqrt(2)*j", "-k", "j", "i"},
        {"1/2*sqrt(2)-1/2*sqrt(2)*j", "k", "j", "-i"},
        {"1/2*sqrt(2)+1/2*sqrt(2)*k", "j", "-i", "k"},
        {"1/2*sqrt(2)*i-1/2*sqrt(2)*j", "-j", "-i", "-k"}};
    return rows;
}

// Weight enumerator common to both diagonal SO(6) groups.
inline const std::vector<std::pair<int, int>>& code_weight_enumerator() {
    static const std::vector<std::pair<int, int>> rows = {{0, 1}, {2, 3}, {4, 3}, {6, 1}};
    return rows;
}

struct VolumePin {
    std::string space;
    std::string volume;  // canonical SymVolume rendering
};

inline const std::vector<VolumePin>& volume_pins() {
    static const std::vector<VolumePin> rows = {
        {"F12", "1/2*pi^3"},
        {"Sp2", "1/12*pi^6"},
        {"U1xSp1", "1/2*pi^3"},
        {"CP3", "1/6*pi^3"},
        {"DiagSU2", "32*pi^2*sqrt(2)"},
        {"SU2", "8/9*pi^2*sqrt(6)"},          // = 8 sqrt2 pi^2 / (3 sqrt3)
        {"SU2cubed", "1024/243*pi^6*sqrt(6)"},
        {"S3xS3", "32/243*pi^4*sqrt(3)"},     // = 32 pi^4 / (81 sqrt3)
    };
    return rows;
}

// Base coefficients of the published six-manifold volume table; every entry
// carries the (30/kappa)^3 normalization factor in the source. The S3xS3
// base entry there reads 8 pi^4/(81 sqrt3) while the explicit computation
// gives 32 pi^4/(81 sqrt3); the computed value is pinned above and the table
// entry is surfaced with a note.
inline const std::vector<VolumePin>& volume_table_entries() {
    static const std::vector<VolumePin> rows = {
        {"S6", "16/15*pi^3"},
        {"CP3", "1/6*pi^3"},
        {"S3xS3", "8/243*pi^4*sqrt(3)"},
        {"F12", "1/2*pi^3"},
    };
    return rows;
}

inline long long gaussian_pin_su3() {
    return 12;
}
inline long long gaussian_pin_sp2() {
    return 192;
}

}  // namespace isospec::golden
