#ifndef GARCAT_CATEGORY_HPP
#define GARCAT_CATEGORY_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace garcat {

// Atom ids and object ids are small dense integers; string labels live in the
// backend that owns them.
using Word = std::vector<int>;

struct ComposabilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A morphism in canonical form. `tgt` is the object the morphism points out
// of (the target map 𝔱), `dom` the object it ends at (the domain map 𝔡);
// the product a*b is defined iff a.dom == b.tgt and walks a first, then b.
// The empty word is the identity at tgt == dom.
struct Morphism {
    Word word;
    int tgt = -1;
    int dom = -1;

    bool is_identity() const { return word.empty(); }
    int length() const { return static_cast<int>(word.size()); }

    friend bool operator==(const Morphism&, const Morphism&) = default;
    friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

enum class Status { Holds, Fails, Unknown };

// Outcome of a bounded decision. Fails always carries replayable witness
// data; Unknown carries the exhausted depth. `exact` distinguishes a
// structural certificate from a checked-up-to-depth result.
struct Verdict {
    Status status = Status::Unknown;
    std::string certificate;
    int depth = -1;
    bool exact = false;
    std::vector<Morphism> witness;

    static Verdict holds(std::string cert, bool exact = true, int depth = -1) {
        return Verdict{Status::Holds, std::move(cert), depth, exact, {}};
    }
    static Verdict fails(std::string cert, std::vector<Morphism> wit = {},
                         bool exact = true, int depth = -1) {
        return Verdict{Status::Fails, std::move(cert), depth, exact, std::move(wit)};
    }
    static Verdict unknown(std::string cert, int depth) {
        return Verdict{Status::Unknown, std::move(cert), depth, false, {}};
    }
    bool ok() const { return status == Status::Holds; }
};

const char* status_name(Status s);

struct AxiomCheck {
    std::string axiom;
    Verdict verdict;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool all_hold() const {
        for (const auto& c : checks)
            if (c.verdict.status != Status::Holds) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }
};

// Uniform interface over the four backends. All queries are const and
// instances are immutable once validated, so concurrent shared reads are
// safe. Morphisms returned by any operation are canonical.
class Category {
public:
    virtual ~Category() = default;

    virtual const char* backend_name() const = 0;

    virtual int object_count() const = 0;
    virtual const std::string& object_label(int v) const = 0;
    int object_index(const std::string& label) const;

    // Atoms are the word alphabet: edges for graph backends, generators for
    // Artin-Tits, all non-identity elements for explicit tables.
    virtual int atom_count() const = 0;
    virtual const std::string& atom_label(int a) const = 0;
    virtual int atom_tgt(int a) const = 0;
    virtual int atom_dom(int a) const = 0;
    int atom_index(const std::string& label) const;

    Morphism identity(int v) const;
    Morphism atom(int a) const;

    // Rewrites a raw composable word to the backend's canonical
    // representative. Throws ComposabilityError on a broken word.
    virtual Morphism canonicalize(const Word& w, int tgt, int dom) const = 0;
    Morphism make(const Word& w, int tgt, int dom) const { return canonicalize(w, tgt, dom); }

    Morphism compose(const Morphism& a, const Morphism& b) const;

    // b in a𝔠.
    virtual bool left_divides(const Morphism& a, const Morphism& b) const = 0;
    // The unique x with a*x == b, if a left-divides b.
    virtual std::optional<Morphism> left_quotient(const Morphism& a, const Morphism& b) const = 0;

    // One representative per =*-class of minimal common right multiples.
    // Empty result certifies a𝔠 ∩ b𝔠 = ∅. Requires a.tgt == b.tgt.
    virtual std::vector<Morphism> mcm_set(const Morphism& a, const Morphism& b) const = 0;

    // All canonical morphisms x with 𝔱(x) = v and atom length ≤ radius,
    // sorted. Throws CapacityError past `cap` elements.
    virtual std::vector<Morphism> ball(int v, int radius, std::size_t cap = 1u << 20) const;

    // Presented backends have 𝔠* = 𝔠⁰; only explicit tables may not.
    virtual bool trivial_units() const { return true; }
    virtual bool is_unit(const Morphism& m) const { return m.is_identity(); }

    // Structural certificates used by the groupoid probes.
    virtual bool right_cancellative_structural() const = 0;
    // All cones over a common vertex intersect (certified, not probed).
    virtual bool left_reversible_structural() const { return false; }
    // Single-object category whose elements embed into a group, so that
    // fraction clearing in the G^c probe is valid.
    virtual bool group_embeddable_monoid() const { return false; }

    virtual ValidationReport validate() const = 0;

    std::string format(const Morphism& m) const;
};

// Exhaustive check that compose(c,x) == compose(c,y) forces x == y on a
// bounded ball; used by validation and tests.
Verdict left_cancellation_probe(const Category& cat, int depth);
Verdict right_cancellation_probe(const Category& cat, int depth);

// finite_alignment_probe: checks for all pairs (a,b) in the ball that
// mcm_set(a,b) is finite and covers a𝔠 ∩ b𝔠 on the ball of radius 2*depth.
// Backends with a structural certificate short-circuit.
Verdict finite_alignment_probe(const Category& cat, int depth);

}  // namespace garcat

#endif
