#include "elect/support.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "maxflow.hpp"
#include "simplex.hpp"

namespace elect {

namespace {

std::string format_set(const Election& e, const CandidateSet& s) {
    std::string out = "{";
    bool sep = false;
    for (CandidateId c : s.members()) {
        if (sep) out += ",";
        out += e.label_of(c);
        sep = true;
    }
    return out + "}";
}

}  // namespace

Rational SupportDistribution::at(const CandidateSet& ballot, CandidateId c) const {
    auto it = shares.find({ballot, c});
    return it == shares.end() ? Rational(0) : it->second;
}

void SupportDistribution::set(const CandidateSet& ballot, CandidateId c, const Rational& value) {
    if (value == 0)
        shares.erase({ballot, c});
    else
        shares[{ballot, c}] = value;
}

Rational SupportVector::min_value() const {
    Rational best(0);
    bool first = true;
    for (const auto& [c, v] : support) {
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

CandidateSet SupportVector::least_supported(const CandidateSet& target) const {
    CandidateSet out(target.universe());
    Rational min = min_value();
    for (CandidateId c : target.members()) {
        auto it = support.find(c);
        Rational v = it == support.end() ? Rational(0) : it->second;
        if (v == min) out.insert(c);
    }
    return out;
}

SupportVector support_vector(const SupportDistribution& f) {
    SupportVector sv;
    for (CandidateId c : f.target.members()) sv.support[c] = 0;
    for (const auto& [key, value] : f.shares) {
        auto it = sv.support.find(key.second);
        if (it != sv.support.end()) it->second += value;
    }
    return sv;
}

ValidationReport validate_distribution(const Election& e, const SupportDistribution& f) {
    ValidationReport rep;
    auto reject = [&](const std::string& constraint, const CandidateSet& y, CandidateId c,
                      const std::string& detail) {
        rep.ok = false;
        rep.violated = constraint;
        rep.offending = {y, c};
        rep.detail = detail;
        return rep;
    };

    for (const auto& [key, value] : f.shares) {
        const auto& [y, c] = key;
        if (value < 0)
            return reject("nonnegative-share", y, c,
                          "share for " + e.label_of(c) + " on ballot " + format_set(e, y) +
                              " is negative (" + fraction_string(value) + ")");
    }
    for (const auto& [key, value] : f.shares) {
        const auto& [y, c] = key;
        if (value == 0) continue;
        if (!y.contains(c))
            return reject("share-outside-ballot", y, c,
                          "ballot " + format_set(e, y) + " does not approve " + e.label_of(c));
        if (!f.target.contains(c))
            return reject("share-outside-ballot", y, c,
                          e.label_of(c) + " is outside the target set " + format_set(e, f.target));
    }
    // Every ballot-type intersecting the target must distribute exactly its
    // count; ballots carrying shares without being in the profile have count 0.
    std::map<CandidateSet, Rational> row;
    for (const auto& [key, value] : f.shares) {
        const auto& [y, c] = key;
        if (y.contains(c) && f.target.contains(c)) row[y] += value;
    }
    for (const auto& [y, count] : e.profile()) {
        if (!y.intersects(f.target)) continue;
        auto it = row.find(y);
        Rational total = it == row.end() ? Rational(0) : it->second;
        if (total != Rational(count))
            return reject("ballot-not-fully-distributed", y, y.intersect(f.target).first(),
                          "ballot " + format_set(e, y) + " distributes " + fraction_string(total) +
                              " of its " + std::to_string(count) + " votes");
    }
    for (const auto& [y, total] : row) {
        if (total == 0 || e.count_of(y) > 0) continue;
        return reject("ballot-not-fully-distributed", y, y.intersect(f.target).first(),
                      "ballot " + format_set(e, y) + " has no votes but distributes " +
                          fraction_string(total));
    }
    return rep;
}

namespace {

// Minimum of supporters(K)/|K| over the non-empty subsets of A, enumerated
// over local bit positions of A's members.
Rational hall_min(const Election& e, const CandidateSet& a) {
    std::vector<CandidateId> members = a.members();
    int k = static_cast<int>(members.size());
    std::vector<int> pos(static_cast<size_t>(a.universe()), -1);
    for (int j = 0; j < k; ++j) pos[static_cast<size_t>(members[static_cast<size_t>(j)])] = j;

    Count best_sup = 0;
    int best_size = 0;

    auto consider = [&](Count sup, int size) {
        if (best_size == 0 ||
            static_cast<__int128>(sup) * best_size < static_cast<__int128>(best_sup) * size) {
            best_sup = sup;
            best_size = size;
        }
    };

    if (k <= 22) {
        // Subset-sum (zeta) transform: w[m] = votes whose A-restriction is
        // exactly m, then w[m] = votes entirely inside m; supporters(K) is the
        // complement count.
        std::vector<Count> w(static_cast<size_t>(1) << k, 0);
        Count total = 0;
        for (const auto& [ballot, count] : e.profile()) {
            std::uint32_t m = 0;
            for (CandidateId c : ballot.intersect(a).members())
                m |= 1u << pos[static_cast<size_t>(c)];
            if (m) {
                w[m] += count;
                total += count;
            }
        }
        for (int b = 0; b < k; ++b)
            for (std::uint32_t m = 0; m < (1u << k); ++m)
                if (m & (1u << b)) w[m] += w[m ^ (1u << b)];
        std::uint32_t full = (k == 32) ? ~0u : (1u << k) - 1;
        for (std::uint32_t m = 1; m <= full; ++m)
            consider(total - w[full ^ m], std::popcount(m));
    } else {
        std::vector<std::uint64_t> masks;
        std::vector<Count> counts;
        for (const auto& [ballot, count] : e.profile()) {
            std::uint64_t m = 0;
            for (CandidateId c : ballot.intersect(a).members())
                m |= 1ull << pos[static_cast<size_t>(c)];
            if (m) {
                masks.push_back(m);
                counts.push_back(count);
            }
        }
        for (std::uint64_t m = 1; m < (1ull << k); ++m) {
            Count sup = 0;
            for (size_t i = 0; i < masks.size(); ++i)
                if (masks[i] & m) sup += counts[i];
            consider(sup, std::popcount(m));
        }
    }
    return Rational(best_sup) / best_size;
}

// Builds an optimal witness at the known value: route ballot weight through a
// bipartite flow with per-candidate demand `value`, then return undistributed
// remainders to the first approved target member of each ballot.
SupportDistribution flow_witness(const Election& e, const CandidateSet& a,
                                 const std::vector<std::pair<CandidateSet, Count>>& rel,
                                 const Rational& value) {
    SupportDistribution f;
    f.target = a;
    if (rel.empty()) return f;
    std::vector<CandidateId> members = a.members();
    int r = static_cast<int>(rel.size());
    int k = static_cast<int>(members.size());
    std::vector<int> pos(static_cast<size_t>(a.universe()), -1);
    for (int j = 0; j < k; ++j) pos[static_cast<size_t>(members[static_cast<size_t>(j)])] = j;

    // Nodes: 0 source, 1..r ballots, r+1..r+k candidates, r+k+1 sink.
    detail::FlowNetwork net(r + k + 2);
    int sink = r + k + 1;
    Rational unlimited(e.ballot_total() + 1);
    std::vector<int> source_edge(static_cast<size_t>(r));
    std::vector<std::vector<std::pair<CandidateId, int>>> mid(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        const auto& [ballot, count] = rel[static_cast<size_t>(i)];
        source_edge[static_cast<size_t>(i)] = net.add_edge(0, 1 + i, Rational(count));
        for (CandidateId c : ballot.intersect(a).members())
            mid[static_cast<size_t>(i)].emplace_back(
                c, net.add_edge(1 + i, 1 + r + pos[static_cast<size_t>(c)], unlimited));
    }
    for (int j = 0; j < k; ++j) net.add_edge(1 + r + j, sink, value);

    Rational flow = net.max_flow(0, sink);
    if (flow != value * k)
        throw std::logic_error("support witness flow does not saturate the optimum");

    for (int i = 0; i < r; ++i) {
        const auto& [ballot, count] = rel[static_cast<size_t>(i)];
        for (const auto& [c, id] : mid[static_cast<size_t>(i)])
            f.set(ballot, c, net.flow_on(id));
        Rational leftover = Rational(count) - net.flow_on(source_edge[static_cast<size_t>(i)]);
        if (leftover != 0) {
            CandidateId c0 = ballot.intersect(a).first();
            f.set(ballot, c0, f.at(ballot, c0) + leftover);
        }
    }
    return f;
}

// Reference path: maximize s subject to the distribution constraints, one
// variable per (ballot, approved target member) pair plus s and one surplus
// slack per target member.
void simplex_value_and_witness(const CandidateSet& a,
                               const std::vector<std::pair<CandidateSet, Count>>& rel,
                               MaxMinResult* out) {
    std::vector<CandidateId> members = a.members();
    int r = static_cast<int>(rel.size());
    int k = static_cast<int>(members.size());

    std::map<std::pair<int, CandidateId>, int> fvar;
    int nf = 0;
    for (int i = 0; i < r; ++i)
        for (CandidateId c : rel[static_cast<size_t>(i)].first.intersect(a).members())
            fvar[{i, c}] = nf++;
    int s_var = nf;
    int slack0 = nf + 1;

    detail::LinearProgram lp;
    lp.num_vars = nf + 1 + k;
    lp.objective.assign(static_cast<size_t>(lp.num_vars), Rational(0));
    lp.objective[static_cast<size_t>(s_var)] = 1;

    for (int i = 0; i < r; ++i) {
        std::vector<Rational> row(static_cast<size_t>(lp.num_vars), Rational(0));
        for (CandidateId c : rel[static_cast<size_t>(i)].first.intersect(a).members())
            row[static_cast<size_t>(fvar[{i, c}])] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(rel[static_cast<size_t>(i)].second);
    }
    for (int j = 0; j < k; ++j) {
        CandidateId c = members[static_cast<size_t>(j)];
        std::vector<Rational> row(static_cast<size_t>(lp.num_vars), Rational(0));
        for (int i = 0; i < r; ++i) {
            auto it = fvar.find({i, c});
            if (it != fvar.end()) row[static_cast<size_t>(it->second)] = 1;
        }
        row[static_cast<size_t>(s_var)] = -1;
        row[static_cast<size_t>(slack0 + j)] = -1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(0);
    }

    detail::SimplexResult res = detail::solve_lp(lp);
    if (!res.feasible || !res.bounded)
        throw std::logic_error("max-min support program must be feasible and bounded");
    out->value = res.value;
    out->witness.target = a;
    out->witness.shares.clear();
    for (const auto& [key, var] : fvar)
        out->witness.set(rel[static_cast<size_t>(key.first)].first, key.second,
                         res.solution[static_cast<size_t>(var)]);
}

// Algorithm-2 closure of {start} inside the least-supported set: grow by any
// least-supported candidate drawing positive share from a ballot that touches
// the closure.
CandidateSet closure_from(const SupportDistribution& f, CandidateId start,
                          const CandidateSet& least) {
    CandidateSet k(f.target.universe());
    k.insert(start);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [key, value] : f.shares) {
            const auto& [ballot, c] = key;
            if (value <= 0 || k.contains(c) || !least.contains(c)) continue;
            if (ballot.contains(c) && ballot.intersects(k)) {
                k.insert(c);
                grew = true;
            }
        }
    }
    return k;
}

// Tightness test for a kernel candidate K: no share may flow to a candidate
// outside K from any ballot touching K.
bool is_tight(const SupportDistribution& f, const CandidateSet& k) {
    for (const auto& [key, value] : f.shares) {
        const auto& [ballot, c] = key;
        if (value <= 0) continue;
        if (!k.contains(c) && f.target.contains(c) && ballot.intersects(k)) return false;
    }
    return true;
}

std::optional<CandidateSet> find_tight_kernel(const SupportDistribution& f,
                                              const Rational& value) {
    SupportVector sv = support_vector(f);
    if (sv.support.empty() || sv.min_value() != value) return std::nullopt;
    CandidateSet least = sv.least_supported(f.target);
    for (CandidateId l : least.members()) {
        CandidateSet k = closure_from(f, l, least);
        if (is_tight(f, k)) return k;
    }
    return std::nullopt;
}

}  // namespace

MaxMinResult maxmin_support(const Election& e, const CandidateSet& a, const SupportOptions& options) {
    if (a.empty()) throw EmptyTargetSet("max-min support needs a non-empty target set");
    std::vector<std::pair<CandidateSet, Count>> rel;
    for (const auto& entry : e.profile())
        if (entry.first.intersects(a)) rel.push_back(entry);

    MaxMinResult out;
    out.value = 0;
    out.witness.target = a;
    if (!rel.empty()) {
        MaxMinMethod method = options.method;
        if (method == MaxMinMethod::Auto)
            method = a.size() <= options.hall_cap ? MaxMinMethod::HallFlow : MaxMinMethod::Simplex;
        if (method == MaxMinMethod::HallFlow) {
            if (a.size() > options.hall_cap)
                throw TargetSetTooLarge("target set of size " + std::to_string(a.size()) +
                                        " exceeds the enumeration cap " +
                                        std::to_string(options.hall_cap));
            out.value = hall_min(e, a);
            out.witness = flow_witness(e, a, rel, out.value);
        } else {
            simplex_value_and_witness(a, rel, &out);
        }
    }
    if (options.with_kernel) {
        auto kernel = find_tight_kernel(out.witness, out.value);
        if (!kernel) throw NoTightKernel("optimal witness unexpectedly lacks a tight kernel");
        out.kernel = *kernel;
    }
    return out;
}

Rational hall_ratio_maxmin(const Election& e, const CandidateSet& a, int cap) {
    if (a.empty()) throw EmptyTargetSet("max-min support needs a non-empty target set");
    if (a.size() > cap)
        throw TargetSetTooLarge("target set of size " + std::to_string(a.size()) +
                                " exceeds the enumeration cap " + std::to_string(cap));
    bool any = false;
    for (const auto& entry : e.profile())
        if (entry.first.intersects(a)) {
            any = true;
            break;
        }
    if (!any) return Rational(0);
    return hall_min(e, a);
}

CandidateSet kernel_of(const Election& e, const SupportDistribution& f, CandidateId least) {
    if (!f.target.contains(least))
        throw NotLeastSupported("candidate is not in the target set");
    SupportVector sv = support_vector(f);
    CandidateSet ls = sv.least_supported(f.target);
    if (!ls.contains(least))
        throw NotLeastSupported("candidate " + e.label_of(least) +
                                " is not among the least supported");
    return closure_from(f, least, ls);
}

CandidateSet tight_kernel(const Election& e, const MaxMinResult& result) {
    (void)e;
    auto kernel = find_tight_kernel(result.witness, result.value);
    if (!kernel)
        throw NoTightKernel("no kernel of the witness is tight; the witness is not optimal");
    return *kernel;
}

std::optional<SupportDistribution> improve_distribution(const Election& e,
                                                        const SupportDistribution& f) {
    if (f.target.empty()) return std::nullopt;
    SupportVector sv = support_vector(f);
    Rational min = sv.min_value();
    if (find_tight_kernel(f, min)) return std::nullopt;

    CandidateSet least = sv.least_supported(f.target);
    int lsize = least.size();
    CandidateSet rest = f.target.difference(least);

    // Gap to the cheapest candidate above the minimum.
    Rational k;
    bool first = true;
    for (CandidateId c : rest.members()) {
        const Rational& v = sv.support.at(c);
        if (first || v < k) k = v;
        first = false;
    }
    k -= min;

    SupportDistribution out = f;
    for (CandidateId l : least.members()) {
        CandidateSet kernel = closure_from(f, l, least);

        // First over-supported donor drawing share from a ballot touching the
        // kernel; candidates in roster order, ballots in canonical order.
        CandidateId donor = -1;
        CandidateSet donor_ballot;
        for (CandidateId c : rest.members()) {
            for (const auto& [ballot, count] : e.profile()) {
                if (ballot.intersects(kernel) && f.at(ballot, c) > 0) {
                    donor = c;
                    donor_ballot = ballot;
                    break;
                }
            }
            if (donor >= 0) break;
        }
        if (donor < 0)
            throw std::logic_error("no donor found although no kernel is tight");

        if (donor_ballot.contains(l)) {
            Rational donor_bound = f.at(donor_ballot, donor) / lsize;
            Rational gap_bound = k / (3 * lsize);
            Rational k2 = std::min(donor_bound, gap_bound);
            out.set(donor_ballot, donor, out.at(donor_ballot, donor) - k2);
            out.set(donor_ballot, l, out.at(donor_ballot, l) + k2);
            continue;
        }

        // Shortest transfer chain l = l_1, ..., l_n inside the kernel ending
        // on the donor ballot; edge u->v needs a shared ballot giving v
        // positive share.
        CandidateSet targets = donor_ballot.intersect(kernel);
        std::vector<CandidateId> kernel_members = kernel.members();
        std::map<CandidateId, std::pair<CandidateId, CandidateSet>> parent;  // node -> (prev, edge ballot)
        std::deque<CandidateId> queue{l};
        CandidateId reached = -1;
        std::vector<char> seen(static_cast<size_t>(f.target.universe()), 0);
        seen[static_cast<size_t>(l)] = 1;
        while (!queue.empty() && reached < 0) {
            CandidateId u = queue.front();
            queue.pop_front();
            for (CandidateId v : kernel_members) {
                if (seen[static_cast<size_t>(v)]) continue;
                CandidateSet edge_ballot;
                bool found = false;
                for (const auto& [ballot, count] : e.profile()) {
                    if (ballot.contains(u) && ballot.contains(v) && f.at(ballot, v) > 0) {
                        edge_ballot = ballot;
                        found = true;
                        break;
                    }
                }
                if (!found) continue;
                seen[static_cast<size_t>(v)] = 1;
                parent[v] = {u, edge_ballot};
                if (targets.contains(v)) {
                    reached = v;
                    break;
                }
                queue.push_back(v);
            }
        }
        if (reached < 0)
            throw std::logic_error("kernel member unreachable along share-bearing ballots");

        // Path and its per-edge ballots, from l to the reached end.
        std::vector<CandidateId> path{reached};
        std::vector<CandidateSet> edges;
        for (CandidateId v = reached; v != l;) {
            const auto& [prev, ballot] = parent.at(v);
            edges.push_back(ballot);
            path.push_back(prev);
            v = prev;
        }
        std::reverse(path.begin(), path.end());
        std::reverse(edges.begin(), edges.end());

        Rational k1;
        bool k1_first = true;
        for (size_t i = 0; i < edges.size(); ++i) {
            Rational v = f.at(edges[i], path[i + 1]);
            if (k1_first || v < k1) k1 = v;
            k1_first = false;
        }
        Rational donor_bound = f.at(donor_ballot, donor) / lsize;
        Rational chain_bound = k1 / lsize;
        Rational gap_bound = k / (3 * lsize);
        Rational k2 = std::min({donor_bound, chain_bound, gap_bound});

        out.set(donor_ballot, donor, out.at(donor_ballot, donor) - k2);
        out.set(donor_ballot, reached, out.at(donor_ballot, reached) + k2);
        for (size_t i = 0; i < edges.size(); ++i) {
            out.set(edges[i], path[i + 1], out.at(edges[i], path[i + 1]) - k2);
            out.set(edges[i], path[i], out.at(edges[i], path[i]) + k2);
        }
    }
    return out;
}

}  // namespace elect
