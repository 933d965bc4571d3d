#include "colexent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "colexent/majorization.hpp"
#include "colexent/serialize.hpp"
#include "colexent/threshold.hpp"
#include "parallel.hpp"

namespace colexent {

namespace {

using Clock = std::chrono::steady_clock;

// Partitions of `total` into positive non-increasing parts with first part
// at most max_part, descending lexicographic.
template <typename Visit>
void partitions(long long total, int max_part, std::vector<int>& parts, Visit&& visit) {
    if (total == 0) {
        visit(parts);
        return;
    }
    for (int p = static_cast<int>(std::min<long long>(max_part, total)); p >= 1; --p) {
        parts.push_back(p);
        partitions(total - p, p, parts, visit);
        parts.pop_back();
    }
}

// Partitions of `total` into exactly `count` parts, each in [1, max_part].
template <typename Visit>
void partitions_exact_len(long long total, int max_part, int count, std::vector<int>& parts,
                          Visit&& visit) {
    if (count == 0) {
        if (total == 0) visit(parts);
        return;
    }
    const long long hi = std::min<long long>(max_part, total - (count - 1));
    for (long long p = hi; p >= 1; --p) {
        if (p * count < total) break;  // remaining parts are at most p
        parts.push_back(static_cast<int>(p));
        partitions_exact_len(total - p, static_cast<int>(p), count - 1, parts, visit);
        parts.pop_back();
    }
}

// Partitions of `total` into at most `count` parts (for compositions padded
// with zeros).
template <typename Visit>
void partitions_max_len(long long total, int max_part, int count, std::vector<int>& parts,
                        Visit&& visit) {
    if (total == 0) {
        visit(parts);
        return;
    }
    if (count == 0) return;
    for (int p = static_cast<int>(std::min<long long>(max_part, total)); p >= 1; --p) {
        if (static_cast<long long>(p) * count < total) break;
        parts.push_back(p);
        partitions_max_len(total - p, p, count - 1, parts, visit);
        parts.pop_back();
    }
}

std::string range_string(const std::string& name, long long hi) {
    return "1 <= " + name + " <= " + std::to_string(hi);
}

void finish(VerificationOutcome& out, const Clock::time_point& t0) {
    out.holds = out.counterexamples.empty();
    out.elapsed = Clock::now() - t0;
}

}  // namespace

std::optional<int> erdos_gallai_violation(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        if (degrees[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("erdos_gallai_violation: negative entry");
        if (i > 0 && degrees[static_cast<std::size_t>(i)] > degrees[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("erdos_gallai_violation: sequence not sorted non-increasing");
        sum += degrees[static_cast<std::size_t>(i)];
    }
    if (sum % 2 != 0) return 0;
    long long lhs = 0;
    for (int j = 1; j <= n; ++j) {
        lhs += degrees[static_cast<std::size_t>(j - 1)];
        long long rhs = static_cast<long long>(j) * (j - 1);
        for (int i = j; i < n; ++i)
            rhs += std::min<long long>(degrees[static_cast<std::size_t>(i)], j);
        if (lhs > rhs) return j;
    }
    return std::nullopt;
}

bool is_graphical(const std::vector<int>& degrees) {
    return !erdos_gallai_violation(degrees).has_value();
}

void enumerate_graphical(long long m, const std::function<void(const DegreeSequence&)>& visit) {
    if (m < 1) throw std::invalid_argument("enumerate_graphical: m must be positive");
    std::vector<int> parts;
    // Largest degree in a simple graph of size m is m itself (the star).
    partitions(2 * m, static_cast<int>(std::min<long long>(m, 2 * m)), parts,
               [&](const std::vector<int>& p) {
                   if (p.front() >= static_cast<int>(p.size())) return;  // need max degree < order
                   if (erdos_gallai_violation(p).has_value()) return;
                   visit(DegreeSequence(p));
               });
}

std::vector<DegreeSequence> enumerate_graphical(long long m) {
    std::vector<DegreeSequence> all;
    enumerate_graphical(m, [&](const DegreeSequence& s) { all.push_back(s); });
    return all;
}

ExtremalReport find_max_h(long long m) {
    ExtremalReport report;
    report.m = m;
    report.expected = degree_sequence(build_colex(m));
    ExactKey best = -1;
    enumerate_graphical(m, [&](const DegreeSequence& s) {
        ExactKey key = h_exact_key(s);
        if (key > best) {
            best = std::move(key);
            report.argmax_sequences.assign(1, s);
        } else if (key == best) {
            report.argmax_sequences.push_back(s);
        }
    });
    report.exact_key = std::move(best);
    report.h_float = h_value(report.argmax_sequences.front());
    const bool contains_expected =
        std::find(report.argmax_sequences.begin(), report.argmax_sequences.end(),
                  report.expected) != report.argmax_sequences.end();
    if (report.argmax_sequences.size() == 1 && contains_expected)
        report.verdict = Verdict::match;
    else if (contains_expected)
        report.verdict = Verdict::tie_with_expected;
    else
        report.verdict = Verdict::mismatch;
    return report;
}

VerificationOutcome verify_main_theorem(long long m_max, const SweepOptions& opts) {
    if (m_max < 1) throw std::invalid_argument("verify_main_theorem: m_max must be positive");
    VerificationOutcome out;
    out.claim_id = "main";
    out.parameter_range = range_string("m", m_max);
    const auto t0 = Clock::now();
    std::vector<ExtremalReport> reports(static_cast<std::size_t>(m_max));
    detail::parallel_for_index(m_max, opts.threads, [&](long long i) {
        reports[static_cast<std::size_t>(i)] = find_max_h(i + 1);
    });
    for (const ExtremalReport& rep : reports) {
        if (rep.verdict == Verdict::match) continue;
        std::string entry = "m=" + std::to_string(rep.m) + ": argmax {";
        for (std::size_t i = 0; i < rep.argmax_sequences.size(); ++i) {
            if (i > 0) entry += " | ";
            entry += to_string(rep.argmax_sequences[i]);
        }
        entry += "}, expected " + to_string(rep.expected) +
                 (rep.verdict == Verdict::tie_with_expected ? " (exact tie)" : "");
        out.counterexamples.push_back(std::move(entry));
    }
    out.details = std::move(reports);
    finish(out, t0);
    return out;
}

VerificationOutcome verify_max_entropy(long long m_max, const SweepOptions& opts) {
    if (m_max < 1) throw std::invalid_argument("verify_max_entropy: m_max must be positive");
    VerificationOutcome out;
    out.claim_id = "maxentropy";
    out.parameter_range = range_string("m", m_max);
    const auto t0 = Clock::now();
    std::vector<std::string> issues(static_cast<std::size_t>(m_max));
    detail::parallel_for_index(m_max, opts.threads, [&](long long i) {
        const long long m = i + 1;
        ExactKey best;
        bool first = true;
        std::vector<DegreeSequence> argmin;
        enumerate_graphical(m, [&](const DegreeSequence& s) {
            ExactKey key = h_exact_key(s);
            if (first || key < best) {
                best = std::move(key);
                argmin.assign(1, s);
                first = false;
            } else if (key == best) {
                argmin.push_back(s);
            }
        });
        const DegreeSequence all_ones(std::vector<int>(static_cast<std::size_t>(2 * m), 1));
        if (best != 1 || argmin.size() != 1 || argmin.front() != all_ones)
            issues[static_cast<std::size_t>(i)] =
                "m=" + std::to_string(m) + ": h-min key " + best.str() + " attained by " +
                std::to_string(argmin.size()) + " sequence(s), expected unique " + to_string(all_ones);
    });
    for (auto& issue : issues)
        if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

VerificationOutcome verify_lemma_largeclique(int k_max, long long span, const SweepOptions& opts) {
    if (k_max < 3) throw std::invalid_argument("verify_lemma_largeclique: k_max must be >= 3");
    if (span < 0) throw std::invalid_argument("verify_lemma_largeclique: span must be >= 0");
    VerificationOutcome out;
    out.claim_id = "largeclique";
    out.parameter_range = "3 <= k <= " + std::to_string(k_max) + ", binom2(k) <= m <= binom2(k)+" +
                          std::to_string(span);
    const auto t0 = Clock::now();
    std::vector<std::string> issues(static_cast<std::size_t>(k_max - 2));
    detail::parallel_for_index(k_max - 2, opts.threads, [&](long long i) {
        const int k = static_cast<int>(i) + 3;
        std::string found;
        for (long long m = binom2(k); m <= binom2(k) + span; ++m) {
            if (compare_h(closed_form_degseq(m, k), closed_form_degseq(m, k - 1)) !=
                std::strong_ordering::greater) {
                found = "k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                        ": h(C(m,k)) <= h(C(m,k-1))";
                break;
            }
        }
        issues[static_cast<std::size_t>(i)] = std::move(found);
    });
    for (auto& issue : issues)
        if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

VerificationOutcome verify_equality_boundary(int k_max) {
    if (k_max < 3) throw std::invalid_argument("verify_equality_boundary: k_max must be >= 3");
    VerificationOutcome out;
    out.claim_id = "boundary";
    out.parameter_range = "3 <= k <= " + std::to_string(k_max) + ", m = binom2(k)-1";
    const auto t0 = Clock::now();
    for (int k = 3; k <= k_max; ++k) {
        const long long m = binom2(k) - 1;
        const DegreeSequence upper = degree_sequence(build_colex_k(m, k));
        const DegreeSequence lower = degree_sequence(build_colex_k(m, k - 1));
        if (upper != lower || upper != closed_form_degseq(m, k) ||
            lower != closed_form_degseq(m, k - 1))
            out.counterexamples.push_back("k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                                          ": " + to_string(upper) + " vs " + to_string(lower));
    }
    finish(out, t0);
    return out;
}

namespace {

std::string check_threshold_theorem_at(long long m) {
    struct Group {
        ExactKey best;
        std::vector<DegreeSequence> argmax;
    };
    std::map<int, Group> by_clique_number;
    enumerate_threshold_by_size(m, [&](const Graph& g) {
        const DegreeSequence ds = degree_sequence(g);
        ExactKey key = h_exact_key(ds);
        auto [it, inserted] = by_clique_number.try_emplace(clique_number(g));
        Group& group = it->second;
        if (inserted || key > group.best) {
            group.best = std::move(key);
            group.argmax.assign(1, ds);
        } else if (key == group.best) {
            group.argmax.push_back(ds);
        }
    });
    std::string issues;
    for (int k = 2; binom2(k - 1) <= m; ++k) {
        const ColexDecomposition d = decompose(m, k);
        if (d.a == 0) continue;  // the theorem requires a > 0
        const DegreeSequence expected = closed_form_degseq(m, k);
        const auto it = by_clique_number.find(k);
        std::string problem;
        if (it == by_clique_number.end())
            problem = "no threshold graph with clique number " + std::to_string(k);
        else if (it->second.argmax.size() != 1 || it->second.argmax.front() != expected)
            problem = "argmax count " + std::to_string(it->second.argmax.size()) + ", got " +
                      to_string(it->second.argmax.front()) + ", expected " + to_string(expected);
        if (!problem.empty()) {
            if (!issues.empty()) issues += "; ";
            issues += "m=" + std::to_string(m) + ", k=" + std::to_string(k) + ": " + problem;
        }
    }
    return issues;
}

}  // namespace

VerificationOutcome verify_threshold_theorem(long long m_max, const SweepOptions& opts) {
    if (m_max < 1) throw std::invalid_argument("verify_threshold_theorem: m_max must be positive");
    VerificationOutcome out;
    out.claim_id = "threshold";
    out.parameter_range = range_string("m", m_max) + ", all k with a > 0";
    const auto t0 = Clock::now();
    std::vector<std::string> issues(static_cast<std::size_t>(m_max));
    detail::parallel_for_index(m_max, opts.threads, [&](long long i) {
        issues[static_cast<std::size_t>(i)] = check_threshold_theorem_at(i + 1);
    });
    for (auto& issue : issues)
        if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

VerificationOutcome verify_extremal_is_threshold(long long m_max, const SweepOptions& opts) {
    if (m_max < 1)
        throw std::invalid_argument("verify_extremal_is_threshold: m_max must be positive");
    VerificationOutcome out;
    out.claim_id = "extremal";
    out.parameter_range = range_string("m", m_max);
    const auto t0 = Clock::now();
    std::vector<std::string> issues(static_cast<std::size_t>(m_max));
    detail::parallel_for_index(m_max, opts.threads, [&](long long i) {
        const long long m = i + 1;
        const ExtremalReport rep = find_max_h(m);
        std::map<DegreeSequence, Graph> realizations;
        enumerate_threshold_by_size(m, [&](const Graph& g) {
            realizations.emplace(degree_sequence(g), g);
        });
        std::string found;
        for (const DegreeSequence& s : rep.argmax_sequences) {
            const auto it = realizations.find(s);
            if (it == realizations.end()) {
                found = "m=" + std::to_string(m) + ": argmax " + to_string(s) +
                        " has no threshold realization";
                break;
            }
            if (!is_connected(it->second)) {
                found = "m=" + std::to_string(m) + ": threshold realization of " + to_string(s) +
                        " is disconnected";
                break;
            }
        }
        issues[static_cast<std::size_t>(i)] = std::move(found);
    });
    for (auto& issue : issues)
        if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

namespace {

std::string check_trees_at(int n) {
    std::vector<std::pair<ExactKey, DegreeSequence>> all;
    std::vector<int> parts;
    partitions_exact_len(2LL * (n - 1), n - 1, n, parts, [&](const std::vector<int>& p) {
        DegreeSequence s(p);
        all.emplace_back(h_exact_key(s), std::move(s));
    });

    std::vector<int> star_v(static_cast<std::size_t>(n), 1);
    star_v[0] = n - 1;
    const DegreeSequence star{std::move(star_v)};
    std::vector<int> path_v(static_cast<std::size_t>(n), 2);
    path_v[static_cast<std::size_t>(n) - 1] = 1;
    path_v[static_cast<std::size_t>(n) - 2] = 1;
    const DegreeSequence path{std::move(path_v)};

    const auto minmax = std::minmax_element(
        all.begin(), all.end(),
        [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    const ExactKey& lo = minmax.first->first;
    const ExactKey& hi = minmax.second->first;
    const auto attains = [&](const ExactKey& key) {
        std::vector<DegreeSequence> hits;
        for (const auto& [k, s] : all)
            if (k == key) hits.push_back(s);
        return hits;
    };

    std::string issues;
    const auto complain = [&](const std::string& what) {
        if (!issues.empty()) issues += "; ";
        issues += "n=" + std::to_string(n) + ": " + what;
    };

    const auto max_hits = attains(hi);
    if (max_hits.size() != 1 || max_hits.front() != star)
        complain("h-max is not uniquely the star");
    const auto min_hits = attains(lo);
    if (min_hits.size() != 1 || min_hits.front() != path)
        complain("h-min is not uniquely the path");

    if (n >= 5) {  // no tree on fewer vertices has exactly 3 leaves
        ExactKey second;
        bool have_second = false;
        for (const auto& [k, s] : all)
            if (k != lo && (!have_second || k < second)) {
                second = k;
                have_second = true;
            }
        std::vector<int> leaf3(static_cast<std::size_t>(n), 2);
        leaf3[0] = 3;
        leaf3[static_cast<std::size_t>(n) - 1] = 1;
        leaf3[static_cast<std::size_t>(n) - 2] = 1;
        leaf3[static_cast<std::size_t>(n) - 3] = 1;
        const DegreeSequence three_leaf{std::move(leaf3)};
        const auto second_hits = have_second ? attains(second) : std::vector<DegreeSequence>{};
        if (second_hits.size() != 1 || second_hits.front() != three_leaf)
            complain("second-smallest h is not exactly the 3-leaf sequence");
    }
    return issues;
}

}  // namespace

VerificationOutcome verify_trees(int n_max, const SweepOptions& opts) {
    if (n_max < 3) throw std::invalid_argument("verify_trees: n_max must be >= 3");
    VerificationOutcome out;
    out.claim_id = "trees";
    out.parameter_range = "3 <= n <= " + std::to_string(n_max);
    const auto t0 = Clock::now();
    std::vector<std::string> issues(static_cast<std::size_t>(n_max - 2));
    detail::parallel_for_index(n_max - 2, opts.threads, [&](long long i) {
        issues[static_cast<std::size_t>(i)] = check_trees_at(static_cast<int>(i) + 3);
    });
    for (auto& issue : issues)
        if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

namespace {

double balanced_gain(const std::vector<long long>& z, int ell) {
    double gain = 0.0;
    for (long long v : z) gain += f_xlogx(v + ell) - f_xlogx(v);
    return gain;
}

std::string check_balanced_cell(long long t, int n, int ell) {
    const std::vector<long long> balanced = balanced_gain_argmax(t, n, ell);
    const double gain_best = balanced_gain(balanced, ell);
    double runner_up = 0.0;
    bool has_other = false;
    std::vector<long long> runner_seq;
    std::vector<int> parts;
    partitions_max_len(t, static_cast<int>(std::min<long long>(t, INT32_MAX)), n, parts,
                       [&](const std::vector<int>& p) {
                           std::vector<long long> z(p.begin(), p.end());
                           z.resize(static_cast<std::size_t>(n), 0);
                           if (z == balanced) return;
                           const double gain = balanced_gain(z, ell);
                           if (!has_other || gain > runner_up) {
                               runner_up = gain;
                               runner_seq = std::move(z);
                               has_other = true;
                           }
                       });
    if (!has_other) return {};
    const double margin = gain_best - runner_up;
    if (margin > 1e-9) return {};
    std::string seq;
    for (std::size_t i = 0; i < runner_seq.size(); ++i) {
        if (i > 0) seq += ",";
        seq += std::to_string(runner_seq[i]);
    }
    const char* kind = margin <= -1e-9 ? "refuted by" : "inconclusive margin against";
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3e", margin);
    return "t=" + std::to_string(t) + ", n=" + std::to_string(n) + ", ell=" + std::to_string(ell) +
           ": " + kind + " (" + seq + "), margin " + buffer;
}

}  // namespace

VerificationOutcome verify_balanced_gain(long long t_max, int n_max, int ell_max,
                                         const SweepOptions& opts) {
    if (t_max < 0 || n_max < 1 || ell_max < 1)
        throw std::invalid_argument("verify_balanced_gain: bad parameters");
    VerificationOutcome out;
    out.claim_id = "balanced";
    out.parameter_range = "0 <= t <= " + std::to_string(t_max) + ", 1 <= n <= " +
                          std::to_string(n_max) + ", 1 <= ell <= " + std::to_string(ell_max);
    const auto t0 = Clock::now();
    std::vector<std::string> issues(static_cast<std::size_t>(t_max + 1));
    detail::parallel_for_index(t_max + 1, opts.threads, [&](long long t) {
        std::string found;
        for (int n = 1; n <= n_max; ++n)
            for (int ell = 1; ell <= ell_max; ++ell) {
                std::string cell = check_balanced_cell(t, n, ell);
                if (!cell.empty()) {
                    if (!found.empty()) found += "; ";
                    found += cell;
                }
            }
        issues[static_cast<std::size_t>(t)] = std::move(found);
    });
    for (auto& issue : issues)
        if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

namespace {

std::string check_bounded_degree_at(long long m, int r) {
    ExactKey best = -1;
    std::vector<DegreeSequence> argmax;
    enumerate_graphical(m, [&](const DegreeSequence& s) {
        if (s[0] > r) return;
        ExactKey key = h_exact_key(s);
        if (key > best) {
            best = std::move(key);
            argmax.assign(1, s);
        } else if (key == best) {
            argmax.push_back(s);
        }
    });

    DegreeSequence expected;
    if (m <= binom2(r + 1)) {
        expected = degree_sequence(build_colex(m));
    } else {
        std::vector<int> v(static_cast<std::size_t>(2 * m / r), r);
        if (2 * m % r != 0) v.push_back(static_cast<int>(2 * m % r));
        expected = DegreeSequence(std::move(v));
    }

    if (argmax.size() == 1 && argmax.front() == expected) return {};
    std::string got = argmax.empty() ? "(none)" : to_string(argmax.front());
    return "m=" + std::to_string(m) + ", r=" + std::to_string(r) + ": argmax count " +
           std::to_string(argmax.size()) + ", got " + got + ", expected " + to_string(expected);
}

}  // namespace

VerificationOutcome verify_bounded_degree(long long m, int r) {
    if (m < 1 || r < 1) throw std::invalid_argument("verify_bounded_degree: bad parameters");
    VerificationOutcome out;
    out.claim_id = "bounded";
    out.parameter_range = "m = " + std::to_string(m) + ", r = " + std::to_string(r);
    const auto t0 = Clock::now();
    std::string issue = check_bounded_degree_at(m, r);
    if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

VerificationOutcome verify_bounded_degree_sweep(long long m_max, const std::vector<int>& rs,
                                                const SweepOptions& opts) {
    if (m_max < 1 || rs.empty())
        throw std::invalid_argument("verify_bounded_degree_sweep: bad parameters");
    VerificationOutcome out;
    out.claim_id = "bounded";
    std::string r_list;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i] < 1) throw std::invalid_argument("verify_bounded_degree_sweep: r must be >= 1");
        if (i > 0) r_list += ",";
        r_list += std::to_string(rs[i]);
    }
    out.parameter_range = range_string("m", m_max) + ", r in {" + r_list + "}";
    const auto t0 = Clock::now();
    std::vector<std::string> issues(static_cast<std::size_t>(m_max));
    detail::parallel_for_index(m_max, opts.threads, [&](long long i) {
        std::string found;
        for (int r : rs) {
            std::string cell = check_bounded_degree_at(i + 1, r);
            if (!cell.empty()) {
                if (!found.empty()) found += "; ";
                found += cell;
            }
        }
        issues[static_cast<std::size_t>(i)] = std::move(found);
    });
    for (auto& issue : issues)
        if (!issue.empty()) out.counterexamples.push_back(std::move(issue));
    finish(out, t0);
    return out;
}

VerificationOutcome verify_telescoping(int k_max, const SweepOptions& opts) {
    if (k_max < 3) throw std::invalid_argument("verify_telescoping: k_max must be >= 3");
    VerificationOutcome out;
    out.claim_id = "telescoping";
    const auto t0 = Clock::now();

    const auto f = [](long long x) -> long double {
        return x <= 1 ? 0.0L : static_cast<long double>(x) * std::log(static_cast<long double>(x));
    };

    struct KResult {
        std::string issue;
        long double min_margin = 0.0L;
        int min_a = 0;
        bool any_strict = false;
    };
    std::vector<KResult> results(static_cast<std::size_t>(k_max - 2));
    detail::parallel_for_index(k_max - 2, opts.threads, [&](long long i) {
        const int k = static_cast<int>(i) + 3;
        KResult res;
        for (int a = 0; a <= k - 2; ++a) {
            const long double lhs =
                static_cast<long double>(a) * (f(k + a - 1) - f(k + a - 2) - f(k - 1) + f(k - 2));
            const long double rhs = f(k - 2 + a) + f(k - 2 - a) - 2 * f(k - 2);
            const long double margin = rhs - lhs;
            if (a == 0) {
                if (margin != 0.0L) {
                    res.issue = "k=" + std::to_string(k) + ", a=0: expected exact equality";
                    break;
                }
                continue;
            }
            if (margin <= 1e-9L) {
                res.issue = "k=" + std::to_string(k) + ", a=" + std::to_string(a) + ": " +
                            (margin <= 0.0L ? "refuted" : "inconclusive margin <= 1e-9");
                break;
            }
            if (!res.any_strict || margin < res.min_margin) {
                res.min_margin = margin;
                res.min_a = a;
                res.any_strict = true;
            }
        }
        results[static_cast<std::size_t>(i)] = std::move(res);
    });

    long double min_margin = 0.0L;
    int at_k = 0;
    int at_a = 0;
    bool any = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].issue.empty()) out.counterexamples.push_back(results[i].issue);
        if (results[i].any_strict && (!any || results[i].min_margin < min_margin)) {
            min_margin = results[i].min_margin;
            at_k = static_cast<int>(i) + 3;
            at_a = results[i].min_a;
            any = true;
        }
    }
    out.parameter_range = "3 <= k <= " + std::to_string(k_max) + ", 0 <= a <= k-2";
    if (any) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.6Le", min_margin);
        out.parameter_range += "; min strict margin " + std::string(buffer) + " at k=" +
                               std::to_string(at_k) + ", a=" + std::to_string(at_a);
    }
    finish(out, t0);
    return out;
}

}  // namespace colexent
