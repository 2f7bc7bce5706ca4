#ifndef HOMCORE_PATH_ALGEBRA_HH
#define HOMCORE_PATH_ALGEBRA_HH

#include <homcore/digraph.hh>
#include <homcore/search.hh>

#include <random>
#include <string>
#include <vector>

namespace homcore {

enum class Letter : char { up, down };

// Word encoding of a height-bounded oriented path.  The expansion always
// carries one implicit rising arc before the word and one after it, so the
// path has letters+3 vertices; the unique height-0 vertex is the beginning
// and the unique height-k vertex the end.  k = 1 is the single arc and the
// only case with no room for the two implicit arcs (letters must be empty).
struct PathWord {
    int k = 1;
    std::vector<Letter> letters;

    bool operator==(const PathWord &) const = default;
};

// Throws ValidationError when the word does not describe a k-bounded path:
// wrong first/last letter, interior height outside [1, k-1], or a final
// height other than k-1.
void validate_path_word(const PathWord & w);

int path_vertex_count(const PathWord & w);

// Word -> oriented path digraph, vertices in walk order (0 is the beginning).
Digraph path_from_word(const PathWord & w);

// Inverse of path_from_word, for any digraph that is a bounded path up to
// relabelling.  Throws ValidationError otherwise.
PathWord word_from_path(const Digraph & g);

// Heights along a path read from the anchor endpoint: profile[0] = 0,
// consecutive entries differ by one.  Throws when g is not an oriented path
// or the anchor is not an endpoint of it.
std::vector<int> height_profile(const Digraph & g, int anchor);

// Homomorphism between two k-bounded paths of the same k.  Any such map is
// onto and sends beginning to beginning and end to end, so the search runs
// with both endpoints pinned; a source smaller than the target is refuted
// without searching.
Tri kb_hom_exists(const PathWord & p, const PathWord & q,
    const SearchOptions & options = {}, SearchStats * stats = nullptr);

// Antichain of pairwise-incomparable k-bounded paths, canonically sorted.
// The empty sum is the lattice zero; the plain directed path is the unit.
struct SumOfPaths {
    int k = 1;
    std::vector<PathWord> elements;

    bool empty() const { return elements.empty(); }
    bool operator==(const SumOfPaths &) const = default;
};

SumOfPaths sum_zero(int k);
SumOfPaths sum_unit(int k); // the directed path of height k

// Drops duplicates and every path that maps onto another retained one, then
// sorts canonically.  The expansion of the result is hom-equivalent to the
// disjoint union of the inputs.
SumOfPaths sum_normalize(int k, std::vector<PathWord> paths,
    const SearchOptions & options = {});

SumOfPaths sum_join(const SumOfPaths & a, const SumOfPaths & b,
    const SearchOptions & options = {});

// Meet: for each pair of elements, enumerate the bounded paths inside their
// tensor product running corner to corner, then normalize the union.  Throws
// CapacityError when more than max_paths walks come up.
SumOfPaths sum_meet(const SumOfPaths & a, const SumOfPaths & b,
    const SearchOptions & options = {}, std::size_t max_paths = 100000);

// Smallest expansion size among the elements; throws on the empty sum.
int min_order(const SumOfPaths & a);

// Disjoint union of the element expansions (0 vertices for the empty sum).
Digraph expand_sum(const SumOfPaths & a);

// Word literals: either plain letters ("U D U U") or run-length form
// ("u1 d1 u2"); case-insensitive.
PathWord parse_word(int k, const std::string & text);
std::string format_word(const PathWord & w);

// Uniform-ish random valid word with at most max_letters letters.
PathWord random_path_word(std::mt19937_64 & rng, int k, int max_letters);

// All valid words for the given k with at most max_letters letters, in
// lexicographic order (up before down).
std::vector<PathWord> enumerate_path_words(int k, int max_letters);

struct LatticeLawReport {
    int trials = 0;
    int law_checks = 0;
    int failures = 0;
    Tri overall = Tri::unknown;
};

// Randomized check of the lattice laws on sums: commutativity,
// associativity, absorption, distributivity, and the 0/1 identities, one
// triple of random sums per trial.
LatticeLawReport check_lattice_laws(std::uint64_t seed, int k, int trials,
    int max_letters = 7, const SearchOptions & options = {},
    std::size_t max_paths = 100000);

}

#endif
