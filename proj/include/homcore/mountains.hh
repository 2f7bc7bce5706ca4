#ifndef HOMCORE_MOUNTAINS_HH
#define HOMCORE_MOUNTAINS_HH

#include <homcore/path_algebra.hh>

#include <vector>

namespace homcore {

// A mountain is the bounded path spelled peak by peak -- rise l_i, fall l_i
// back to height 1 -- followed by a full ascent.  With peaks within [1, k]
// the result is a (k+2)-bounded path on 2*sum(peaks) + k + 3 vertices.
struct MountainSeq {
    int k = 1;
    std::vector<int> peaks;

    bool operator==(const MountainSeq &) const = default;
};

bool is_strictly_decreasing(const MountainSeq & s);

// Throws ValidationError when some peak leaves [1, k].
PathWord mountain_from_sequence(const MountainSeq & s);

int mountain_vertex_count(const MountainSeq & s);

// Decides whether the mountain of l maps homomorphically onto the mountain
// of r by matching r as a subsequence of l: everything before the first
// match stays at or below r_1, and every run between consecutive matches
// stays at or below the larger of the two surrounding matched peaks.  Peaks
// after the last match are free -- they fold into the target's final ascent.
// Decided by dynamic programming over match positions.
bool seq_homomorphic(const MountainSeq & l, const MountainSeq & r);

enum class MountainGenMode {
    fixed_first,   // first peak pinned to h-2; count C(h-3, l-1)
    all_decreasing // any strictly decreasing peaks in [1, h-2]; count C(h-2, l)
};

// All decreasing-mountain sequences of height h with l peaks (k = h-2).
// Requires h > l + 2.
std::vector<MountainSeq> gen_decreasing_mountains(int h, int l,
    MountainGenMode mode = MountainGenMode::fixed_first);

struct OmegaResult {
    MountainSeq omega;
    bool degenerate = false; // single-peak input: no separator exists
};

// The separating sequence for one member d of a decreasing-mountain family:
// its mountain maps to every other member's mountain but not to d's.
// Requires d decreasing with first peak k, and d drawn from `family`.
OmegaResult omega_sequence(const MountainSeq & d, const std::vector<MountainSeq> & family);

struct OmegaCheck {
    MountainSeq d;
    MountainSeq omega;
    bool degenerate = false;
    bool seq_route_ok = false;   // separator verdicts via the sequence criterion
    Tri engine_route_ok = Tri::unknown; // same verdicts via homomorphism search
    Tri product_independent = Tri::unknown; // product of the others does not reach d
};

struct MountainFamilyReport {
    int h = 0;
    int l = 0;
    std::vector<MountainSeq> family;
    std::size_t count_fixed_first = 0;
    std::size_t count_all_decreasing = 0;
    std::vector<OmegaCheck> members;
    Tri all_members_cores = Tri::unknown;
    Tri overall = Tri::unknown;
    SearchStats stats;
};

// Full check of the separator construction over DM(h, l): for every member,
// both routes agree that omega reaches all other members but not d, and the
// product of the other members does not map onto d.
MountainFamilyReport verify_mountain_family(int h, int l,
    const SearchOptions & options = {},
    std::size_t max_product_vertices = default_max_product_vertices);

}

#endif
