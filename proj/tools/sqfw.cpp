// sqfw -- generate, query, and verify the two-sided ternary square-free
// sequence; check arbitrary words for square factors.
//
// Exit codes: 0 success / square-free, 1 property violation found,
// 2 usage or parse error, 3 resource limit, 4 I/O failure.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfw/balanced_ternary.hpp"
#include "sqfw/dfao.hpp"
#include "sqfw/morphism.hpp"
#include "sqfw/repetition.hpp"
#include "sqfw/verification.hpp"
#include "sqfw/words.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

unsigned max_depth_from_env() {
    const char* env = std::getenv("SQFW_MAX_DEPTH");
    if (env == nullptr || *env == '\0') return sqfw::kDefaultMaxDepth;
    unsigned depth = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), depth);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("SQFW_MAX_DEPTH must be a non-negative integer, got \"" +
                                    std::string(env) + "\"");
    }
    return depth;
}

std::size_t range_cap(unsigned max_depth) {
    std::size_t cap = 1;
    for (unsigned k = 0; k < max_depth && k < 33; ++k) cap *= 3;
    return cap;
}

std::int64_t parse_int64(std::string_view text, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("cannot parse ") + what + " from \"" + std::string(text) + "\"");
    }
    return value;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const std::size_t sep = text.find("..", 1);  // lo may start with '-'
    if (sep == std::string::npos) {
        throw std::invalid_argument("range must look like lo..hi, got \"" + text + "\"");
    }
    return {parse_int64(std::string_view(text).substr(0, sep), "range start"),
            parse_int64(std::string_view(text).substr(sep + 2), "range end")};
}

std::string symbol_token(sqfw::Alphabet a, std::int8_t s) {
    if (a == sqfw::Alphabet::Balanced) return s < 0 ? "-1" : (s == 0 ? "0" : "+1");
    return std::to_string(static_cast<int>(s));
}

void emit_word(const sqfw::Word& w, std::int64_t first_index, const std::string& format) {
    if (format == "plain") {
        std::cout << w.str() << "\n";
        return;
    }
    if (format == "spaced") {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k > 0) std::cout << ' ';
            std::cout << symbol_token(w.alphabet(), w[k]);
        }
        std::cout << "\n";
        return;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
        nlohmann::ordered_json record;
        record["index"] = first_index + static_cast<std::int64_t>(k);
        record["symbol"] = static_cast<int>(w[k]);
        std::cout << record.dump() << "\n";
    }
}

sqfw::Alphabet detect_alphabet(std::string_view text) {
    bool balanced = false;
    bool only01 = true, only123 = true, only012 = true;
    for (char c : text) {
        if (c == '-' || c == '+') balanced = true;
        if (c != '0' && c != '1') only01 = false;
        if (c != '1' && c != '2' && c != '3') only123 = false;
        if (c != '0' && c != '1' && c != '2') only012 = false;
    }
    if (balanced) return sqfw::Alphabet::Balanced;
    if (only01) return sqfw::Alphabet::Binary;
    if (only123) return sqfw::Alphabet::Ternary123;
    if (only012) return sqfw::Alphabet::Counts012;
    throw std::invalid_argument("input fits no supported alphabet");
}

sqfw::Alphabet alphabet_by_name(const std::string& name) {
    if (name == "ternary123") return sqfw::Alphabet::Ternary123;
    if (name == "balanced") return sqfw::Alphabet::Balanced;
    if (name == "binary") return sqfw::Alphabet::Binary;
    return sqfw::Alphabet::Counts012;
}

struct GenerateArgs {
    std::string definition;
    int depth = -1;
    std::string range_text;
    std::string alphabet = "ternary123";
    std::string format = "plain";
    int seed_symbol = 2;
};

int run_generate(const GenerateArgs& args) {
    const unsigned max_depth = max_depth_from_env();
    if (args.definition == "morphism") {
        if (args.depth < 0) throw std::invalid_argument("--definition morphism requires --n");
        if (!args.range_text.empty()) throw std::invalid_argument("--range applies to --definition dfao only");
        sqfw::Word seed(sqfw::Alphabet::Ternary123,
                        {static_cast<std::int8_t>(args.seed_symbol)});
        sqfw::Word w = sqfw::expand_iterate(seed, static_cast<unsigned>(args.depth), max_depth);
        if (args.alphabet == "balanced") w = sqfw::relabel_to_balanced(w);
        emit_word(w, -static_cast<std::int64_t>((w.size() - 1) / 2), args.format);
        return 0;
    }
    if (args.range_text.empty()) throw std::invalid_argument("--definition dfao requires --range lo..hi");
    if (args.depth >= 0) throw std::invalid_argument("--n applies to --definition morphism only");
    const auto [lo, hi] = parse_range(args.range_text);
    sqfw::Word w = sqfw::squarefree_range(lo, hi, range_cap(max_depth));
    if (args.alphabet == "ternary123") w = sqfw::relabel_to_ternary(w);
    emit_word(w, lo, args.format);
    return 0;
}

int run_at(std::int64_t index) {
    const sqfw::BalancedDigits digits = sqfw::BalancedDigits::encode(index);
    std::cout << index << ' ' << digits.str() << ' '
              << symbol_token(sqfw::Alphabet::Balanced, sqfw::squarefree_at(index)) << "\n";
    return 0;
}

int run_check(const std::string& input_path, const std::string& alphabet_choice) {
    std::string content;
    if (input_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        content = buffer.str();
    } else {
        std::ifstream in(input_path, std::ios::binary);
        if (!in) {
            std::cerr << "cannot open " << input_path << "\n";
            return kExitIo;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        content = buffer.str();
    }
    while (!content.empty() && (content.back() == '\n' || content.back() == '\r' || content.back() == ' ' ||
                                content.back() == '\t')) {
        content.pop_back();
    }
    const sqfw::Alphabet alphabet =
        alphabet_choice == "auto" ? detect_alphabet(content) : alphabet_by_name(alphabet_choice);
    const sqfw::Word w = sqfw::Word::parse(alphabet, content);
    if (const auto square = sqfw::find_square(w)) {
        std::cout << "square at p=" << square->position << " len=" << 2 * square->half_length << "\n";
        return kExitViolation;
    }
    std::cout << "square-free\n";
    return 0;
}

struct VerifyArgs {
    unsigned n_max = 9;
    unsigned naive_n_max = 6;
    std::uint64_t seed = 20260808;
    std::string report_path;
    bool fault_inject = false;
};

int run_verify(const VerifyArgs& args) {
    sqfw::VerifyConfig config;
    config.n_max = args.n_max;
    config.naive_n_max = args.naive_n_max;
    config.seed = args.seed;
    config.fault_inject = args.fault_inject;
    config.max_depth = max_depth_from_env();
    const sqfw::VerificationReport report = sqfw::verify_all(config);
    if (args.report_path.empty()) {
        std::cout << report.to_jsonl();
        std::cerr << report.summary();
    } else {
        std::ofstream out(args.report_path);
        if (!out) {
            std::cerr << "cannot open " << args.report_path << " for writing\n";
            return kExitIo;
        }
        out << report.to_jsonl();
        if (!out.good()) {
            std::cerr << "failed writing " << args.report_path << "\n";
            return kExitIo;
        }
        std::cout << report.summary();
    }
    return report.all_pass() ? 0 : kExitViolation;
}

// Keeps negative values out of CLI11's flag matching: gluing them onto their
// option (--range=-13..13) and shielding the positional of `at` behind "--".
std::vector<std::string> preprocess_args(int argc, char** argv) {
    std::vector<std::string> args;
    bool after_at = false;
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg == "--range" && k + 1 < argc) {
            args.push_back("--range=" + std::string(argv[k + 1]));
            ++k;
            continue;
        }
        if (after_at && arg.size() > 1 && arg[0] == '-' &&
            arg.find_first_not_of("0123456789", 1) == std::string::npos) {
            args.push_back("--");
        }
        after_at = arg == "at";
        args.push_back(std::move(arg));
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sided ternary square-free sequence toolkit"};
    app.require_subcommand(1);

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "emit a stretch of the sequence");
    generate->add_option("--definition", generate_args.definition, "construction to use")
        ->required()
        ->check(CLI::IsMember({"morphism", "dfao"}));
    generate->add_option("--n", generate_args.depth, "expansion depth (morphism)");
    generate->add_option("--range", generate_args.range_text, "index range lo..hi (dfao)");
    generate->add_option("--alphabet", generate_args.alphabet, "output alphabet")
        ->check(CLI::IsMember({"ternary123", "balanced"}));
    generate->add_option("--format", generate_args.format, "output format")
        ->check(CLI::IsMember({"plain", "spaced", "jsonl"}));
    generate
        ->add_option("--seed-symbol", generate_args.seed_symbol,
                     "alternate morphism seed, exploratory; square-freeness is only established for 2")
        ->check(CLI::Range(1, 3));

    std::string at_index_text;
    auto* at = app.add_subcommand("at", "one sequence value with its balanced-ternary digits");
    at->add_option("index", at_index_text, "signed sequence index")->required();

    std::string check_input = "-";
    std::string check_alphabet = "auto";
    auto* check = app.add_subcommand("check", "test a word for square factors");
    check->add_option("input", check_input, "input file, or - for stdin");
    check->add_option("--alphabet", check_alphabet, "input alphabet")
        ->check(CLI::IsMember({"auto", "ternary123", "balanced", "binary", "counts012"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the verification suite and write a JSONL report");
    verify->add_option("--n-max", verify_args.n_max, "sweep bound for the word-level checks");
    verify->add_option("--naive-n-max", verify_args.naive_n_max, "oracle cross-check bound");
    verify->add_option("--seed", verify_args.seed, "seed for randomized checks");
    verify->add_option("--report", verify_args.report_path, "write the JSONL report to this file");
    verify->add_flag("--fault-inject", verify_args.fault_inject,
                     "corrupt generated words; the suite must then fail (negative control)");

    auto* dot = app.add_subcommand("dot", "print the sequence automaton as GraphViz DOT");

    try {
        std::vector<std::string> args = preprocess_args(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 wants them reversed
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(generate_args);
        if (at->parsed()) return run_at(parse_int64(at_index_text, "index"));
        if (check->parsed()) return run_check(check_input, check_alphabet);
        if (verify->parsed()) return run_verify(verify_args);
        if (dot->parsed()) std::cout << sqfw::squarefree_dfao().to_dot();
        return 0;
    } catch (const sqfw::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "out of memory\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
