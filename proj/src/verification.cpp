#include "sqfw/verification.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sqfw/dfao.hpp"
#include "sqfw/reference_sequences.hpp"
#include "sqfw/repetition.hpp"

namespace sqfw {

bool VerificationReport::all_pass() const { return fail_count() == 0; }

std::size_t VerificationReport::fail_count() const {
    std::size_t fails = 0;
    for (const CheckResult& check : checks) {
        if (!check.pass) ++fails;
    }
    return fails;
}

std::string VerificationReport::to_jsonl() const {
    std::string out;
    for (const CheckResult& check : checks) {
        nlohmann::ordered_json record;
        record["name"] = check.name;
        record["params"] = check.params;
        record["status"] = check.pass ? "pass" : "fail";
        record["witness"] = check.witness;
        record["ms"] = check.ms;
        out += record.dump();
        out += '\n';
    }
    return out;
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    for (const CheckResult& check : checks) {
        out << (check.pass ? "pass" : "FAIL") << "  " << check.name;
        if (!check.params.empty()) out << " (" << check.params << ")";
        if (!check.witness.empty()) out << ": " << check.witness;
        out << "\n";
    }
    out << checks.size() << " checks, " << (checks.size() - fail_count()) << " passed, " << fail_count()
        << " failed\n";
    return out.str();
}

namespace {

using WordSource = std::function<Word(unsigned)>;

WordSource plain_source(unsigned max_depth) {
    return [max_depth](unsigned n) { return squarefree_word(n, max_depth); };
}

// Deterministically flips one symbol per word; the negative control that
// guards the suite against vacuous checks.
WordSource corrupted_source(unsigned max_depth, std::uint64_t seed) {
    return [max_depth, seed](unsigned n) {
        Word w = squarefree_word(n, max_depth);
        if (w.empty()) return w;
        const std::size_t pos =
            static_cast<std::size_t>((seed ^ (0x9e3779b97f4a7c15ULL * (n + 1))) % w.size());
        std::vector<std::int8_t> symbols(w.symbols().begin(), w.symbols().end());
        symbols[pos] = static_cast<std::int8_t>(symbols[pos] % 3 + 1);  // 1->2, 2->3, 3->1
        return Word(Alphabet::Ternary123, std::move(symbols));
    };
}

template <typename Body>
CheckResult timed_check(std::string name, std::string params, Body&& body) {
    CheckResult result;
    result.name = std::move(name);
    result.params = std::move(params);
    const auto start = std::chrono::steady_clock::now();
    body(result);
    result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string describe_square(unsigned n, const SquareWitness& w) {
    return "level " + std::to_string(n) + ": square at p=" + std::to_string(w.position) +
           " len=" + std::to_string(2 * w.half_length);
}

CheckResult iterates_squarefree_impl(unsigned n_max, unsigned naive_n_max, const WordSource& source) {
    return timed_check(
        "iterates_squarefree", "n_max=" + std::to_string(n_max) + " naive_n_max=" + std::to_string(naive_n_max),
        [&](CheckResult& result) {
            if (n_max == 0) {
                result.witness = "vacuous: no levels tested";
                return;
            }
            for (unsigned n = 1; n <= n_max; ++n) {
                const Word w = source(n);
                const auto fast = find_square(w);
                if (fast) {
                    result.pass = false;
                    result.witness = describe_square(n, *fast);
                    return;
                }
                if (n <= naive_n_max) {
                    if (const auto naive = find_square_naive(w)) {
                        result.pass = false;
                        result.witness = "oracle disagrees: " + describe_square(n, *naive);
                        return;
                    }
                }
            }
            result.witness = "square-free for n = 1.." + std::to_string(n_max) +
                             " (finite prefix of a claim for all n); oracle concurred for n <= " +
                             std::to_string(std::min(n_max, naive_n_max));
        });
}

CheckResult block_permutations_impl(unsigned n, const WordSource& source) {
    return timed_check("block_permutations", "n=" + std::to_string(n), [&](CheckResult& result) {
        if (n == 0) {
            result.witness = "vacuous: level 0 has no 3-blocks";
            return;
        }
        const Word w = source(n);
        for (std::size_t block = 0; 3 * block < w.size(); ++block) {
            const std::int8_t a = w[3 * block];
            const std::int8_t b = w[3 * block + 1];
            const std::int8_t c = w[3 * block + 2];
            if (a == b || b == c || a == c) {
                result.pass = false;
                result.witness = "block " + std::to_string(block) + " at position " + std::to_string(3 * block) +
                                 " is " + std::to_string(a) + std::to_string(b) + std::to_string(c);
                return;
            }
        }
    });
}

CheckResult center_extraction_impl(unsigned n, const WordSource& source) {
    return timed_check("center_extraction", "n=" + std::to_string(n), [&](CheckResult& result) {
        if (n == 0) {
            result.witness = "vacuous: level 0 has no parent";
            return;
        }
        const Word extracted = center_extract(source(n));
        const Word expected = source(n - 1);
        if (extracted == expected) return;
        result.pass = false;
        for (std::size_t k = 0; k < extracted.size() && k < expected.size(); ++k) {
            if (extracted[k] != expected[k]) {
                result.witness = "first mismatch at position " + std::to_string(k) + ": extracted " +
                                 std::to_string(extracted[k]) + ", level " + std::to_string(n - 1) + " has " +
                                 std::to_string(expected[k]);
                return;
            }
        }
        result.witness = "length mismatch: " + std::to_string(extracted.size()) + " vs " +
                         std::to_string(expected.size());
    });
}

CheckResult route_agreement_impl(unsigned n_max, const WordSource& source) {
    return timed_check("route_agreement", "n_max=" + std::to_string(n_max), [&](CheckResult& result) {
        if (n_max == 0) {
            result.witness = "vacuous: no levels tested";
            return;
        }
        for (unsigned n = 1; n <= n_max; ++n) {
            const Word expected = relabel_to_balanced(source(n));
            const std::int64_t half = static_cast<std::int64_t>((expected.size() - 1) / 2);
            for (std::int64_t i = -half; i <= half; ++i) {
                const std::int8_t automaton = squarefree_at(i);
                const std::int8_t morphism = expected[static_cast<std::size_t>(i + half)];
                if (automaton != morphism) {
                    result.pass = false;
                    result.witness = "n=" + std::to_string(n) + ", index " + std::to_string(i) +
                                     ": automaton " + std::to_string(automaton) + ", morphism " +
                                     std::to_string(morphism);
                    return;
                }
            }
        }
        result.witness = "routes agree for n = 1.." + std::to_string(n_max) + " (all indices)";
    });
}

CheckResult boundary_forms_impl(unsigned n_max, const WordSource& source) {
    return timed_check("boundary_forms", "n_max=" + std::to_string(n_max), [&](CheckResult& result) {
        for (unsigned n = 1; n <= n_max; ++n) {
            const Word w = source(n);
            const std::string text = w.str();
            const std::string head = text.substr(0, 3);
            const std::string tail = text.substr(text.size() - 3);
            const bool odd = n % 2 == 1;
            const std::string expected_head = odd ? "123" : "213";
            const std::string expected_tail = odd ? "123" : "132";
            if (head != expected_head || tail != expected_tail) {
                result.pass = false;
                result.witness = "n=" + std::to_string(n) + ": starts " + head + " ends " + tail +
                                 ", expected " + expected_head + "..." + expected_tail;
                return;
            }
        }
    });
}

CheckResult antisymmetry_probe_impl(unsigned n_max, const WordSource& source) {
    return timed_check("antisymmetry_probe", "n_max=" + std::to_string(n_max), [&](CheckResult& result) {
        // Exploratory observation, recorded but never a gate: is the window
        // invariant under reversal plus symbol negation, on both routes?
        std::string outcome;
        for (unsigned n = 1; n <= n_max; ++n) {
            const Word morphism_side = relabel_to_balanced(source(n));
            const std::int64_t half = static_cast<std::int64_t>((morphism_side.size() - 1) / 2);
            const Word automaton_side = squarefree_range(-half, half);

            auto reflected = [](const Word& w, std::size_t k) {
                return static_cast<std::int8_t>(-w[w.size() - 1 - k]);
            };
            bool morphism_holds = true;
            bool automaton_holds = true;
            for (std::size_t k = 0; k < morphism_side.size(); ++k) {
                if (morphism_side[k] != reflected(morphism_side, k)) morphism_holds = false;
                if (automaton_side[k] != reflected(automaton_side, k)) automaton_holds = false;
            }
            if (!morphism_holds || !automaton_holds) {
                outcome = "antisymmetry breaks at n=" + std::to_string(n) + " (morphism " +
                          (morphism_holds ? "holds" : "breaks") + ", automaton " +
                          (automaton_holds ? "holds" : "breaks") + ")";
                break;
            }
        }
        if (outcome.empty()) {
            outcome = "observed: reversal plus negation fixes every window up to n=" + std::to_string(n_max) +
                      " on both routes";
        }
        result.witness = outcome;
    });
}

CheckResult thue_morse_equivalence_impl(unsigned log2_bound) {
    return timed_check("thue_morse/definition_equivalence", "i < 2^" + std::to_string(log2_bound),
                       [&](CheckResult& result) {
                           const Word t = thue_morse_iterate(log2_bound);
                           for (std::size_t i = 0; i < t.size(); ++i) {
                               if (t[i] != thue_morse_at(i)) {
                                   result.pass = false;
                                   result.witness = "mismatch at i=" + std::to_string(i);
                                   return;
                               }
                           }
                       });
}

CheckResult thue_morse_convergence_impl(unsigned n_max) {
    return timed_check("thue_morse/prefix_convergence", "n_max=" + std::to_string(n_max),
                       [&](CheckResult& result) {
                           Word previous = thue_morse_iterate(0);
                           for (unsigned n = 1; n <= n_max; ++n) {
                               const Word next = thue_morse_iterate(n);
                               for (std::size_t k = 0; k < previous.size(); ++k) {
                                   if (next[k] != previous[k]) {
                                       result.pass = false;
                                       result.witness = "level " + std::to_string(n) +
                                                        " diverges from its predecessor at position " +
                                                        std::to_string(k);
                                       return;
                                   }
                               }
                               previous = next;
                           }
                       });
}

CheckResult gap_word_impl(unsigned log2_prefix) {
    return timed_check(
        "thue_morse/gap_word_squarefree", "prefix 2^" + std::to_string(log2_prefix), [&](CheckResult& result) {
            const Word gap_word = ones_between_zeros(thue_morse_iterate(log2_prefix));
            const std::string expected_head = "21020121012";
            if (gap_word.str().substr(0, expected_head.size()) != expected_head) {
                result.pass = false;
                result.witness = "gap word starts " + gap_word.str().substr(0, expected_head.size()) +
                                 ", expected " + expected_head;
                return;
            }
            if (const auto square = find_square(gap_word)) {
                result.pass = false;
                result.witness = "square at p=" + std::to_string(square->position) +
                                 " len=" + std::to_string(2 * square->half_length);
            }
        });
}

CheckResult thue_morse_dfao_impl(unsigned log2_bound) {
    return timed_check("thue_morse/dfao_agreement", "i < 2^" + std::to_string(log2_bound),
                       [&](CheckResult& result) {
                           const std::uint64_t bound = std::uint64_t{1} << log2_bound;
                           for (std::uint64_t i = 0; i < bound; ++i) {
                               if (thue_morse_automatic(i) != thue_morse_at(i)) {
                                   result.pass = false;
                                   result.witness = "mismatch at i=" + std::to_string(i);
                                   return;
                               }
                           }
                       });
}

CheckResult oracle_agreement_impl(std::uint64_t seed) {
    return timed_check(
        "repetition/oracle_agreement", "10^4 words <= 64, 10^3 words <= 512, seed=" + std::to_string(seed),
        [&](CheckResult& result) {
            std::mt19937_64 rng(seed);
            auto random_word = [&rng](std::size_t max_len) {
                std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
                std::uniform_int_distribution<int> sym_dist(1, 3);
                const std::size_t len = len_dist(rng);
                std::vector<std::int8_t> symbols;
                symbols.reserve(len);
                for (std::size_t k = 0; k < len; ++k) {
                    symbols.push_back(static_cast<std::int8_t>(sym_dist(rng)));
                }
                return Word(Alphabet::Ternary123, std::move(symbols));
            };
            auto check_word = [&result](const Word& w) {
                const auto naive = find_square_naive(w);
                const auto fast = find_square(w);
                if (naive.has_value() != fast.has_value()) {
                    result.pass = false;
                    result.witness = "detectors disagree on \"" + w.str() + "\"";
                    return false;
                }
                if ((naive && !witness_valid(w, *naive)) || (fast && !witness_valid(w, *fast))) {
                    result.pass = false;
                    result.witness = "invalid witness on \"" + w.str() + "\"";
                    return false;
                }
                return true;
            };
            for (int k = 0; k < 10000; ++k) {
                if (!check_word(random_word(64))) return;
            }
            for (int k = 0; k < 1000; ++k) {
                if (!check_word(random_word(512))) return;
            }
        });
}

}  // namespace

CheckResult verify_iterates_squarefree(unsigned n_max, unsigned naive_n_max) {
    return iterates_squarefree_impl(n_max, naive_n_max, plain_source(std::max(n_max, kDefaultMaxDepth)));
}

CheckResult verify_block_permutations(unsigned n) {
    return block_permutations_impl(n, plain_source(std::max(n, kDefaultMaxDepth)));
}

CheckResult verify_center_extraction(unsigned n) {
    return center_extraction_impl(n, plain_source(std::max(n, kDefaultMaxDepth)));
}

CheckResult verify_route_agreement(unsigned n_max) {
    return route_agreement_impl(n_max, plain_source(std::max(n_max, kDefaultMaxDepth)));
}

VerificationReport verify_all(const VerifyConfig& config) {
    const WordSource source = config.fault_inject ? corrupted_source(config.max_depth, config.seed)
                                                  : plain_source(config.max_depth);
    VerificationReport report;
    report.checks.push_back(iterates_squarefree_impl(config.n_max, config.naive_n_max, source));
    for (unsigned n = 1; n <= config.n_max; ++n) {
        report.checks.push_back(block_permutations_impl(n, source));
    }
    for (unsigned n = 1; n <= config.n_max; ++n) {
        report.checks.push_back(center_extraction_impl(n, source));
    }
    report.checks.push_back(route_agreement_impl(config.n_max, source));
    report.checks.push_back(boundary_forms_impl(config.n_max, source));
    report.checks.push_back(antisymmetry_probe_impl(config.antisymmetry_n_max, source));
    report.checks.push_back(thue_morse_equivalence_impl(config.thue_morse_log2));
    report.checks.push_back(thue_morse_convergence_impl(19));
    report.checks.push_back(gap_word_impl(config.gap_word_log2));
    report.checks.push_back(thue_morse_dfao_impl(config.thue_morse_log2));
    report.checks.push_back(oracle_agreement_impl(config.seed));
    return report;
}

}  // namespace sqfw
