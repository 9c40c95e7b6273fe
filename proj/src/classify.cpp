#include "garcat/classify.hpp"

#include <algorithm>
#include <deque>
#include <thread>

namespace garcat {

bool pair_subset(const InvariantPair& a, const InvariantPair& b) {
    return std::includes(b.T.begin(), b.T.end(), a.T.begin(), a.T.end()) &&
           std::includes(b.D.begin(), b.D.end(), a.D.begin(), a.D.end());
}

std::string pair_str(const GarsideFamily& fam, const InvariantPair& p) {
    std::string s = "T={";
    bool first = true;
    for (int t : p.T) {
        if (!first) s += ",";
        s += fam.cat().format(fam.letter(t));
        first = false;
    }
    s += "} D={";
    first = true;
    for (int v : p.D) {
        if (!first) s += ",";
        s += fam.cat().object_label(v);
        first = false;
    }
    return s + "}";
}

Verdict is_admissible(const GarsideFamily& fam, const InvariantPair& p) {
    for (int t : p.T) {
        if (p.D.count(fam.letter(t).dom)) continue;
        bool has_witness = false;
        for (int t2 : p.T)
            if (fam.letter(t2).tgt == fam.letter(t).dom && normal_pair(fam, t, t2)) {
                has_witness = true;
                break;
            }
        if (!has_witness)
            return Verdict::fails("letter " + fam.cat().format(fam.letter(t)) +
                                      " has no normal successor in T and no exit to D",
                                  {fam.letter(t)});
    }
    return Verdict::holds("every letter continues in T or exits to D");
}

Verdict is_h_invariant(const GarsideFamily& fam, const InvariantPair& p, int depth) {
    const auto& cat = fam.cat();
    if (cat.trivial_units()) {
        // Single-letter reduction through the nested head rule: checking
        // H(s x) for letters s and x in T, plus every letter into a vertex
        // of D, decides the full quantifier exactly.
        for (int s = 0; s < fam.size(); ++s) {
            if (p.D.count(fam.letter(s).dom) && !p.T.count(s))
                return Verdict::fails("letter " + cat.format(fam.letter(s)) +
                                          " ends in D but is outside T",
                                      {fam.letter(s)});
            for (int x : p.T) {
                if (fam.letter(s).dom != fam.letter(x).tgt) continue;
                int h = fam.head(cat.compose(fam.letter(s), fam.letter(x)));
                if (!p.T.count(h))
                    return Verdict::fails("H(" + cat.format(fam.letter(s)) + "*" +
                                              cat.format(fam.letter(x)) + ") = " +
                                              cat.format(fam.letter(h)) + " escapes T",
                                          {fam.letter(s), fam.letter(x), fam.letter(h)});
            }
        }
        return Verdict::holds("single-letter head closure (exact by the nested head rule)");
    }
    // Nontrivial units: bounded ball check, inexact above depth.
    for (int v = 0; v < cat.object_count(); ++v)
        for (const auto& a : cat.ball(v, depth)) {
            if (cat.is_unit(a)) continue;
            for (int x : p.T) {
                if (a.dom != fam.letter(x).tgt) continue;
                int h = fam.head(cat.compose(a, fam.letter(x)));
                if (!p.T.count(h))
                    return Verdict::fails("H(a*x) escapes T",
                                          {a, fam.letter(x), fam.letter(h)});
            }
            for (int dv : p.D) {
                if (a.dom != dv) continue;
                int h = fam.head(a);
                if (!p.T.count(h))
                    return Verdict::fails("H(a) escapes T for a ending in D",
                                          {a, fam.letter(h)});
            }
        }
    return Verdict::unknown("no violation on the ball; units prevent the exact reduction",
                            depth);
}

Verdict is_max_closed(const GarsideFamily& fam, const InvariantPair& p) {
    if (fam.locally_finite())
        return Verdict::holds("vacuous: family is locally finite");
    // Oscillating sequences drawn from T can converge to a common divisor;
    // probe all two-letter windows of distinct letters.
    std::vector<int> ts(p.T.begin(), p.T.end());
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (fam.letter(ts[i]).tgt != fam.letter(ts[j]).tgt) continue;
            auto lim = limit_of_letters(fam, {ts[i], ts[j]});
            for (int r : lim.maximal)
                if (!p.T.count(r))
                    return Verdict::fails(
                        "limit of oscillating sequence (" + fam.cat().format(fam.letter(ts[i])) +
                            "," + fam.cat().format(fam.letter(ts[j])) + ") is " +
                            fam.cat().format(fam.letter(r)) + ", outside T u D",
                        {fam.letter(ts[i]), fam.letter(ts[j]), fam.letter(r)});
        }
    return Verdict::holds("all window limits stay in T u D", false);
}

bool pair_valid(const GarsideFamily& fam, InvariantPair& p, int depth) {
    p.admissible = is_admissible(fam, p);
    p.h_invariant = is_h_invariant(fam, p, depth);
    p.max_closed = is_max_closed(fam, p);
    return p.admissible.ok() && p.h_invariant.ok() && p.max_closed.ok();
}

InvariantPair closure(const GarsideFamily& fam, const InvariantPair& p, int depth) {
    const auto& cat = fam.cat();
    InvariantPair out = p;
    bool grew = true;
    while (grew) {
        grew = false;
        if (cat.trivial_units()) {
            for (int s = 0; s < fam.size(); ++s) {
                if (out.D.count(fam.letter(s).dom)) {
                    if (out.T.insert(s).second) grew = true;
                }
                for (int x : std::vector<int>(out.T.begin(), out.T.end())) {
                    if (fam.letter(s).dom != fam.letter(x).tgt) continue;
                    int h = fam.head(cat.compose(fam.letter(s), fam.letter(x)));
                    if (out.T.insert(h).second) grew = true;
                }
            }
        } else {
            for (int v = 0; v < cat.object_count(); ++v)
                for (const auto& a : cat.ball(v, depth)) {
                    if (cat.is_unit(a)) continue;
                    for (int x : std::vector<int>(out.T.begin(), out.T.end())) {
                        if (a.dom != fam.letter(x).tgt) continue;
                        int h = fam.head(cat.compose(a, fam.letter(x)));
                        if (out.T.insert(h).second) grew = true;
                    }
                    for (int dv : out.D)
                        if (a.dom == dv && out.T.insert(fam.head(a)).second) grew = true;
                }
        }
        if (!fam.locally_finite()) {
            // Adjoin limits of oscillating windows in T.
            std::vector<int> ts(out.T.begin(), out.T.end());
            for (std::size_t i = 0; i < ts.size(); ++i)
                for (std::size_t j = i + 1; j < ts.size(); ++j) {
                    if (fam.letter(ts[i]).tgt != fam.letter(ts[j]).tgt) continue;
                    for (int r : limit_of_letters(fam, {ts[i], ts[j]}).maximal)
                        if (out.T.insert(r).second) grew = true;
                }
        }
    }
    return out;
}

InvariantPair interior(const GarsideFamily& fam, const InvariantPair& p) {
    InvariantPair out = p;
    bool shrank = true;
    while (shrank) {
        shrank = false;
        for (int t : std::vector<int>(out.T.begin(), out.T.end())) {
            if (out.D.count(fam.letter(t).dom)) continue;
            bool has_witness = false;
            for (int t2 : out.T)
                if (fam.letter(t2).tgt == fam.letter(t).dom && normal_pair(fam, t, t2)) {
                    has_witness = true;
                    break;
                }
            if (!has_witness) {
                out.T.erase(t);
                shrank = true;
            }
        }
    }
    return out;
}

bool x_membership(const GarsideFamily& fam, const InvariantPair& p, const Character& chi) {
    switch (chi.kind) {
        case Character::Kind::Vertex: return p.D.count(chi.vertex) > 0;
        case Character::Kind::Finite: {
            if (!p.D.count(chi.finite.dom)) return false;
            for (int l : normal_decompose(fam, chi.finite))
                if (!p.T.count(l)) return false;
            return true;
        }
        case Character::Kind::Infinite: {
            for (int l : chi.preperiod)
                if (!p.T.count(l)) return false;
            for (int l : chi.period)
                if (!p.T.count(l)) return false;
            return true;
        }
    }
    return false;
}

InvariantPair pair_of_subspace(const GarsideFamily& fam, const std::vector<Character>& sample) {
    InvariantPair p;
    for (const auto& chi : sample) {
        switch (chi.kind) {
            case Character::Kind::Vertex: p.D.insert(chi.vertex); break;
            case Character::Kind::Finite:
                for (int l : normal_decompose(fam, chi.finite)) p.T.insert(l);
                break;
            case Character::Kind::Infinite:
                for (int l : chi.preperiod) p.T.insert(l);
                for (int l : chi.period) p.T.insert(l);
                break;
        }
    }
    return p;
}

Character witness_char(const GarsideFamily& fam, const InvariantPair& p, int t) {
    if (!p.T.count(t)) throw DomainError("witness_char: letter not in T");
    // Follow admissibility witnesses until a letter repeats (period found)
    // or a D vertex is reached (finite character).
    std::vector<int> path{t};
    std::vector<int> seen_at(fam.size(), -1);
    seen_at[t] = 0;
    while (true) {
        int last = path.back();
        if (p.D.count(fam.letter(last).dom)) {
            Morphism x = product(fam, path, fam.letter(t).tgt);
            return finite_character(x);
        }
        int next = -1;
        for (int t2 : p.T)
            if (fam.letter(t2).tgt == fam.letter(last).dom && normal_pair(fam, last, t2)) {
                next = t2;
                break;
            }
        if (next < 0)
            throw DomainError("witness_char: pair is not admissible at " +
                              fam.cat().format(fam.letter(last)));
        if (seen_at[next] >= 0) {
            std::vector<int> pre(path.begin(), path.begin() + seen_at[next]);
            std::vector<int> per(path.begin() + seen_at[next], path.end());
            return infinite_character(fam, std::move(pre), std::move(per));
        }
        seen_at[next] = static_cast<int>(path.size());
        path.push_back(next);
    }
}

std::set<int> d_max_set(const GarsideFamily& fam) {
    const auto& cat = fam.cat();
    std::set<int> out;
    for (int v = 0; v < cat.object_count(); ++v) {
        bool only_units = true;
        for (int a = 0; a < cat.atom_count() && only_units; ++a)
            if (cat.atom_tgt(a) == v && !cat.is_unit(cat.atom(a))) only_units = false;
        if (only_units) out.insert(v);
    }
    return out;
}

std::set<int> t_max_set(const GarsideFamily& fam, int depth) {
    const auto& cat = fam.cat();
    std::set<int> dmax = d_max_set(fam);
    std::set<int> out;
    for (int t = 0; t < fam.size(); ++t) {
        // Clause 1: some cone at dom(t) avoids every letter extending t
        // inside the family.
        std::vector<Morphism> blockers;
        for (int t2 : fam.letters_at(fam.letter(t).dom)) {
            Morphism prod = cat.compose(fam.letter(t), fam.letter(t2));
            if (fam.find(prod) >= 0) blockers.push_back(fam.letter(t2));
        }
        bool found = blockers.empty();
        if (!found)
            for (const auto& x : cat.ball(fam.letter(t).dom, depth)) {
                bool disjoint_all = true;
                for (const auto& b : blockers)
                    if (!cat.mcm_set(x, b).empty()) {
                        disjoint_all = false;
                        break;
                    }
                if (disjoint_all) {
                    found = true;
                    break;
                }
            }
        if (found) {
            out.insert(t);
            continue;
        }
        // Clause 2: a finite normal path from t reaches a vertex of D_max.
        std::deque<int> queue{t};
        std::set<int> visited{t};
        bool reaches = false;
        while (!queue.empty() && !reaches) {
            int cur = queue.front();
            queue.pop_front();
            if (dmax.count(fam.letter(cur).dom)) {
                reaches = true;
                break;
            }
            for (int nxt : normal_successors(fam, cur))
                if (visited.insert(nxt).second) queue.push_back(nxt);
        }
        if (reaches) out.insert(t);
    }
    return out;
}

InvariantPair boundary_pair(const GarsideFamily& fam, int depth) {
    InvariantPair p;
    p.T = t_max_set(fam, depth);
    p.D = d_max_set(fam);
    return closure(fam, p, depth);
}

SubspaceLattice enumerate_pairs(const GarsideFamily& fam, int depth, std::size_t cap,
                                int jobs) {
    const auto& cat = fam.cat();
    std::size_t bits = fam.size() + cat.object_count();
    if (bits > cap)
        throw CapacityError("enumerate_pairs: " + std::to_string(bits) +
                            " letters+vertices exceed the cap of " + std::to_string(cap) +
                            "; use closure from seed pairs instead");
    std::uint64_t total = 1ull << bits;

    auto candidate = [&](std::uint64_t mask) {
        InvariantPair p;
        for (int i = 0; i < fam.size(); ++i)
            if (mask & (1ull << i)) p.T.insert(i);
        for (int v = 0; v < cat.object_count(); ++v)
            if (mask & (1ull << (fam.size() + v))) p.D.insert(v);
        return p;
    };

    std::vector<std::vector<InvariantPair>> chunks;
    int workers = std::max(1, jobs);
    chunks.resize(workers);
    auto run = [&](int w) {
        for (std::uint64_t mask = w; mask < total; mask += workers) {
            InvariantPair p = candidate(mask);
            if (pair_valid(fam, p, depth)) chunks[w].push_back(std::move(p));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    SubspaceLattice lat;
    for (auto& chunk : chunks)
        for (auto& p : chunk) lat.pairs.push_back(std::move(p));
    std::sort(lat.pairs.begin(), lat.pairs.end(), [](const InvariantPair& a,
                                                     const InvariantPair& b) {
        auto ka = std::make_tuple(a.T.size() + a.D.size(), a.T, a.D);
        auto kb = std::make_tuple(b.T.size() + b.D.size(), b.T, b.D);
        return ka < kb;
    });

    for (std::size_t i = 0; i < lat.pairs.size(); ++i)
        for (std::size_t j = 0; j < lat.pairs.size(); ++j) {
            if (i == j || !pair_subset(lat.pairs[i], lat.pairs[j])) continue;
            bool cover = true;
            for (std::size_t k = 0; k < lat.pairs.size() && cover; ++k)
                if (k != i && k != j && pair_subset(lat.pairs[i], lat.pairs[k]) &&
                    pair_subset(lat.pairs[k], lat.pairs[j]))
                    cover = false;
            if (cover) lat.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }

    InvariantPair bd = boundary_pair(fam, depth);
    for (std::size_t i = 0; i < lat.pairs.size(); ++i) {
        if (pair_subset(lat.pairs[i], bd)) lat.boundary_index.push_back(static_cast<int>(i));
        if (lat.pairs[i] == bd) lat.boundary = static_cast<int>(i);
    }
    return lat;
}

Verdict garside_topfree_probe(const GarsideFamily& fam, const InvariantPair& p1,
                              const InvariantPair& p2, int depth) {
    const auto& cat = fam.cat();
    if (!pair_subset(p1, p2)) throw DomainError("garside_topfree_probe: pair1 must lie in pair2");

    if (!cat.trivial_units())
        for (int v : p2.D)
            if (!p1.D.count(v))
                for (int a = 0; a < cat.atom_count(); ++a)
                    if (cat.atom_tgt(a) == v && cat.atom_dom(a) == v &&
                        cat.is_unit(cat.atom(a)))
                        return Verdict::fails("vertex " + cat.object_label(v) +
                                                  " in D2 \\ D1 carries a nontrivial unit",
                                              {cat.atom(a)});

    std::vector<int> diff;
    for (int t : p2.T)
        if (!p1.T.count(t)) diff.push_back(t);

    for (int v = 0; v < cat.object_count(); ++v) {
        auto paths = normal_paths_from(fam, v, 1, depth);
        for (const auto& a : paths)
            for (const auto& b : paths) {
                if (a[0] == b[0]) continue;
                Morphism am = product(fam, a, v);
                Morphism bm = product(fam, b, v);
                if (am.dom != bm.dom) continue;
                for (int s : diff) {
                    if (fam.letter(s).dom != am.dom) continue;
                    bool witness = false;
                    for (int t : diff) {
                        if (fam.letter(t).tgt != fam.letter(s).dom) continue;
                        if (!normal_pair(fam, s, t)) continue;
                        int ha = fam.head(cat.compose(am, fam.letter(t)));
                        int hb = fam.head(cat.compose(bm, fam.letter(t)));
                        if (ha != hb) {
                            witness = true;
                            break;
                        }
                    }
                    if (!witness) {
                        std::vector<Morphism> wit{am, bm, fam.letter(s)};
                        return Verdict::fails(
                            "no separating continuation for paths " + cat.format(am) + " , " +
                                cat.format(bm) + " at letter " + cat.format(fam.letter(s)),
                            std::move(wit), true, depth);
                    }
                }
            }
    }
    return Verdict::holds("separating continuations exist for all path pairs", false, depth);
}

Verdict garside_loccontr_probe(const GarsideFamily& fam, const InvariantPair& p1,
                               const InvariantPair& p2, int depth) {
    const auto& cat = fam.cat();
    if (!pair_subset(p1, p2))
        throw DomainError("garside_loccontr_probe: pair1 must lie in pair2");

    std::vector<int> diff;
    for (int t : p2.T)
        if (!p1.T.count(t)) diff.push_back(t);
    if (diff.empty())
        return Verdict::fails("T2 \\ T1 is empty: no room for a contraction", {}, true, depth);

    // Maximal letters of the difference set under left divisibility.
    std::vector<int> maximal;
    for (int s : diff) {
        bool is_max = true;
        for (int s2 : diff)
            if (s2 != s && cat.left_divides(fam.letter(s), fam.letter(s2)) &&
                !cat.left_divides(fam.letter(s2), fam.letter(s))) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(s);
    }

    // Normal paths with all letters in diff.
    auto diff_paths = [&](int v) {
        std::vector<std::vector<int>> out;
        for (const auto& p : normal_paths_from(fam, v, 1, depth)) {
            bool inside = true;
            for (int l : p)
                if (std::find(diff.begin(), diff.end(), l) == diff.end()) {
                    inside = false;
                    break;
                }
            if (inside) out.push_back(p);
        }
        return out;
    };

    auto diverge = [](const std::vector<int>& q1, const std::vector<int>& q2) {
        std::size_t n = std::min(q1.size(), q2.size());
        for (std::size_t i = 0; i < n; ++i)
            if (q1[i] != q2[i]) return true;
        return false;
    };

    for (int v = 0; v < cat.object_count(); ++v) {
        for (const auto& c : diff_paths(v)) {
            int cv = fam.letter(c.back()).dom;
            int ctgt = fam.letter(c.front()).tgt;
            bool have = false;
            for (int s : maximal) {
                // p bridges c to s: c p s normal.
                std::vector<std::vector<int>> bridges{{}};
                for (const auto& mid : normal_paths_from(fam, cv, 1, depth))
                    bridges.push_back(mid);
                for (const auto& p : bridges) {
                    std::vector<int> cps = c;
                    cps.insert(cps.end(), p.begin(), p.end());
                    cps.push_back(s);
                    if (fam.letter(s).tgt != (p.empty() ? cv : fam.letter(p.back()).dom))
                        continue;
                    if (!is_normal(fam, cps).normal) continue;
                    // q1, q2 divergent with s q c normal.
                    std::vector<std::vector<int>> rets{{}};
                    for (const auto& q : normal_paths_from(fam, fam.letter(s).dom, 1, depth))
                        rets.push_back(q);
                    std::vector<std::vector<int>> good;
                    for (const auto& q : rets) {
                        if (!q.empty() && fam.letter(q.back()).dom != ctgt) continue;
                        if (q.empty() && fam.letter(s).dom != ctgt) continue;
                        std::vector<int> sqc{s};
                        sqc.insert(sqc.end(), q.begin(), q.end());
                        sqc.insert(sqc.end(), c.begin(), c.end());
                        if (is_normal(fam, sqc).normal) good.push_back(q);
                    }
                    for (std::size_t i = 0; i < good.size() && !have; ++i)
                        for (std::size_t j = i + 1; j < good.size(); ++j)
                            if (diverge(good[i], good[j])) {
                                have = true;
                                break;
                            }
                    if (have) break;
                }
                if (have) break;
            }
            if (!have)
                return Verdict::fails("no contraction witness within depth for the path " +
                                          cat.format(product(fam, c, v)),
                                      {product(fam, c, v)}, false, depth);
        }
    }
    return Verdict::holds("contraction witnesses found for every path", false, depth);
}

}  // namespace garcat
