#ifndef GARCAT_GARSIDE_HPP
#define GARCAT_GARSIDE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "garcat/category.hpp"

namespace garcat {

// A Garside family: an indexed, unit-free, =*-transverse set of letters.
// Letters are addressed by index into `letters`. The head memo is keyed by
// canonical morphism; results are deterministic, so concurrent fills are
// harmless.
class GarsideFamily {
public:
    GarsideFamily(const Category& cat, std::vector<Morphism> letters,
                  bool locally_finite = true);

    const Category& cat() const { return *cat_; }
    int size() const { return static_cast<int>(letters_.size()); }
    const Morphism& letter(int i) const { return letters_.at(i); }
    const std::vector<int>& letters_at(int v) const { return by_tgt_.at(v); }
    int find(const Morphism& m) const;
    bool locally_finite() const { return locally_finite_; }

    // Unique maximal left divisor of a in the family. Precondition: a is
    // not invertible.
    int head(const Morphism& a) const;

private:
    const Category* cat_;
    std::vector<Morphism> letters_;
    std::vector<std::vector<int>> by_tgt_;
    bool locally_finite_;
    mutable std::map<Morphism, int> head_cache_;
    mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
};

// Greedy junction test: (s, t) is normal iff every family letter dividing
// s*t already divides s.
bool normal_pair(const GarsideFamily& fam, int s, int t);

struct NormalityResult {
    bool normal = true;
    int violation_index = -1;  // first bad junction
    int violating_letter = -1; // r with r | s_k s_{k+1}, r not | s_k
};

NormalityResult is_normal(const GarsideFamily& fam, const std::vector<int>& path);

// Product of a letter path; `vertex_if_empty` anchors the empty path.
Morphism product(const GarsideFamily& fam, const std::vector<int>& path, int vertex_if_empty);

// Greedy normal decomposition by head peeling; identities give the empty
// word. Fails with UnsupportedClassError if a nontrivial unit remains.
std::vector<int> normal_decompose(const GarsideFamily& fam, const Morphism& a);

int s_length(const GarsideFamily& fam, const Morphism& a);

// head(product(prefix) * r1) computed right-to-left through the nested head
// rule, never forming the full product.
int head_incremental(const GarsideFamily& fam, const std::vector<int>& prefix, int r1);

// All elements x with tgt(x) = v and S-length <= radius.
std::vector<Morphism> s_ball(const GarsideFamily& fam, int v, int radius);

// Letter paths (as index sequences) of length min_len..max_len starting at
// any letter with tgt == v, every junction normal.
std::vector<std::vector<int>> normal_paths_from(const GarsideFamily& fam, int v, int min_len,
                                                int max_len);

// Letters t that can normally follow s.
std::vector<int> normal_successors(const GarsideFamily& fam, int s);

ValidationReport validate_family(const GarsideFamily& fam, int depth);

}  // namespace garcat

#endif
