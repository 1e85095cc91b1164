// Command-line surface for the sum-rank code library: tower setup, bound tables,
// code construction, encoding, bounded-distance decoding, exhaustive minimum
// distance, and the randomized property suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "sumrank/decoder.hpp"
#include "sumrank/selfcheck.hpp"
#include "sumrank/srbch.hpp"

using namespace sumrank;

namespace {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::budget_exceeded:
            return 3;
        case Errc::verification_failed:
        case Errc::cross_check_mismatch:
            return 5;
        case Errc::parse_error:
            return 6;
        default:
            return 2;  // invalid parameters / violated preconditions
    }
}

[[noreturn]] void fail(const Error& err) {
    nlohmann::json j;
    j["error"] = errc_name(err.code());
    j["message"] = err.what();
    std::cerr << j.dump() << "\n";
    std::exit(exit_code_for(err.code()));
}

std::uint64_t budget_from_env() {
    if (const char* env = std::getenv("SUMRANK_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

struct TowerArgs {
    unsigned p = 2, e = 1, m = 2, s = 1, ell = 0;  // ell 0 = derive 2^s - 1 style default

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "characteristic");
        cmd->add_option("--e", e, "q0 = p^e");
        cmd->add_option("--m", m, "extension degree m");
        cmd->add_option("--s", s, "extension degree s (q = q0^s)")->required();
        cmd->add_option("--ell", ell, "number of blocks (default: q-1)");
    }
    Tower build() const {
        unsigned l = ell;
        if (l == 0) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < e * s; ++i) q *= p;
            l = static_cast<unsigned>(q - 1);
            if (l == 0) l = 1;
        }
        return Tower::build(p, e, m, s, l);
    }
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::parse_error, "cannot open output file: " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::parse_error, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Felem> parse_vector(const Tower& tw, const std::string& text) {
    std::vector<Felem> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) out.push_back(tw.elem_from_text(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::string format_vector(const Tower& tw, const std::vector<Felem>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += tw.elem_to_text(v[i]);
    }
    return out;
}

struct LoadedCode {
    std::unique_ptr<Tower> tower;  // stable address; the code refers into it
    SrBchCode code;
};

LoadedCode load_code(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, false);
    require(!j.is_discarded(), Errc::parse_error, "bad code JSON");
    require(j.contains("tower"), Errc::parse_error, "code JSON lacks a tower record");
    auto tower = std::make_unique<Tower>(Tower::from_text(j["tower"].get<std::string>()));
    SrBchCode code = srbch_from_json(*tower, j.dump());
    return {std::move(tower), std::move(code)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic-skew-cyclic and sum-rank BCH codes over finite-field towers"};
    app.require_subcommand(1);

    // --- tower ---------------------------------------------------------------
    auto* cmd_tower = app.add_subcommand("tower", "construct a field tower and print it");
    TowerArgs tower_args;
    tower_args.attach(cmd_tower);
    bool tower_json = false;
    cmd_tower->add_flag("--json", tower_json, "emit JSON");

    // --- table ---------------------------------------------------------------
    auto* cmd_table = app.add_subcommand("table", "dimension-bound table (CSV)");
    TowerArgs table_args;
    table_args.attach(cmd_table);
    std::string preset, rows_arg, table_out;
    unsigned table_delta = 0, table_b = 0, table_jobs = 1;
    bool table_exact = false;
    cmd_table->add_option("--preset", preset, "row preset: appendix");
    cmd_table->add_option("--rows", rows_arg, "rows as delta:b[,delta:b...]");
    cmd_table->add_option("--delta", table_delta, "single row: prescribed distance");
    cmd_table->add_option("--b", table_b, "single row: shift b");
    cmd_table->add_flag("--exact", table_exact, "also compute exact dimensions");
    cmd_table->add_option("--jobs", table_jobs, "row-parallel workers");
    cmd_table->add_option("-o,--output", table_out, "output file (default stdout)");

    // --- construct -------------------------------------------------------------
    auto* cmd_construct = app.add_subcommand("construct", "build an SR-BCH code (JSON)");
    TowerArgs cons_args;
    cons_args.attach(cmd_construct);
    unsigned cons_delta = 2, cons_b = 0;
    std::string cons_out;
    cmd_construct->add_option("--delta", cons_delta, "prescribed distance")->required();
    cmd_construct->add_option("--b", cons_b, "shift b");
    cmd_construct->add_option("-o,--output", cons_out, "output file (default stdout)");

    // --- encode ---------------------------------------------------------------
    auto* cmd_encode = app.add_subcommand("encode", "message -> codeword");
    std::string enc_code, enc_message;
    cmd_encode->add_option("--code", enc_code, "code JSON file")->required();
    cmd_encode->add_option("--message", enc_message, "comma-separated element digits")
        ->required();

    // --- decode ---------------------------------------------------------------
    auto* cmd_decode = app.add_subcommand("decode", "bounded-distance decoding");
    std::string dec_code, dec_word;
    cmd_decode->add_option("--code", dec_code, "code JSON file")->required();
    cmd_decode->add_option("--word", dec_word, "received word, comma-separated")->required();

    // --- mindist ---------------------------------------------------------------
    auto* cmd_mindist = app.add_subcommand("mindist", "exhaustive minimum sum-rank distance");
    std::string md_code, md_ext = "q0";
    cmd_mindist->add_option("--code", md_code, "code JSON file")->required();
    cmd_mindist->add_option("--extension", md_ext, "metric extension: q0 (default) or q");

    // --- verify ---------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "randomized property suite on a tower");
    TowerArgs ver_args;
    ver_args.attach(cmd_verify);
    unsigned ver_cases = 200;
    std::uint64_t ver_seed = 1;
    cmd_verify->add_option("--cases", ver_cases, "cases per property");
    cmd_verify->add_option("--seed", ver_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        nlohmann::json j;
        j["error"] = "InvalidArgument";
        j["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return 2;
    }

    try {
        if (*cmd_tower) {
            Tower tw = tower_args.build();
            if (tower_json) {
                nlohmann::json j;
                j["tower"] = tw.to_text();
                j["field_size"] = tw.field_size();
                j["n"] = tw.ell() * tw.m();
                j["primitive_root_of_unity"] = tw.elem_to_text(tw.primitive_root_of_unity());
                j["normal_element"] = tw.elem_to_text(tw.normal_element());
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << tw.to_text() << "\n";
            }
            return 0;
        }

        if (*cmd_table) {
            Tower tw = table_args.build();
            std::vector<std::pair<unsigned, unsigned>> rows;
            if (preset == "appendix") {
                rows = preset_rows(tw.s());
            } else if (!preset.empty()) {
                raise(Errc::invalid_argument, "unknown preset: " + preset);
            }
            if (!rows_arg.empty()) {
                std::istringstream ss(rows_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    auto colon = tok.find(':');
                    require(colon != std::string::npos, Errc::invalid_argument,
                            "rows must be delta:b pairs");
                    try {
                        rows.emplace_back(std::stoul(tok.substr(0, colon)),
                                          std::stoul(tok.substr(colon + 1)));
                    } catch (const std::exception&) {
                        raise(Errc::invalid_argument, "rows must be delta:b integer pairs");
                    }
                }
            }
            if (table_delta != 0) rows.emplace_back(table_delta, table_b);
            require(!rows.empty(), Errc::invalid_argument,
                    "no rows selected: use --preset, --rows or --delta/--b");
            auto table = generate_table(tw, std::move(rows), table_exact, table_jobs);
            write_output(table_out, table_to_csv(table));
            return 0;
        }

        if (*cmd_construct) {
            Tower tw = cons_args.build();
            SrBchCode code = srbch_construct(tw, cons_b, cons_delta);
            write_output(cons_out, srbch_to_json(code) + "\n");
            return 0;
        }

        if (*cmd_encode) {
            LoadedCode lc = load_code(enc_code);
            const Tower& tw = *lc.tower;
            std::vector<Felem> msg = parse_vector(tw, enc_message);
            require(msg.size() == lc.code.genmat.rows, Errc::length_mismatch,
                    "message length must equal the code dimension");
            for (Felem x : msg)
                require(tw.in_subfield(x, tw.deg_f()), Errc::invalid_argument,
                        "message entries must lie in F");
            std::cout << format_vector(tw, vec_mat(tw, msg, lc.code.genmat)) << "\n";
            return 0;
        }

        if (*cmd_decode) {
            LoadedCode lc = load_code(dec_code);
            const Tower& tw = *lc.tower;
            std::vector<Felem> word = parse_vector(tw, dec_word);
            DecodeResult res = decode(lc.code, word, budget_from_env());
            if (!res.ok) {
                nlohmann::json j;
                j["error"] = "RadiusExceeded";
                j["message"] = "no codeword within the decoding radius";
                std::cerr << j.dump() << "\n";
                return 4;
            }
            nlohmann::json j;
            j["codeword"] = format_vector(tw, res.codeword);
            j["error_weight"] = res.error_weight;
            j["engine"] = res.engine == DecodeResult::Engine::parent   ? "parent"
                          : res.engine == DecodeResult::Engine::direct ? "direct"
                                                                       : "plugin";
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cmd_mindist) {
            LoadedCode lc = load_code(md_code);
            const Tower& tw = *lc.tower;
            require(md_ext == "q0" || md_ext == "q", Errc::invalid_argument,
                    "--extension must be q0 or q");
            Partition part{tw.ell(), tw.m()};
            Extension ext = md_ext == "q0" ? ext_q0(tw) : ext_q(tw);
            unsigned d = min_sum_rank_distance_bruteforce(tw, lc.code.genmat, part, ext,
                                                          budget_from_env());
            std::cout << d << "\n";
            return 0;
        }

        if (*cmd_verify) {
            Tower tw = ver_args.build();
            auto reports = run_property_suite(tw, ver_cases, ver_seed);
            bool all_ok = true;
            for (const auto& rep : reports) {
                bool ok = rep.failures == 0;
                all_ok = all_ok && ok;
                std::cout << (ok ? "[PASS] " : "[FAIL] ") << rep.name << " (" << rep.cases
                          << " cases, " << rep.failures << " failures)\n";
            }
            return all_ok ? 0 : 5;
        }
    } catch (const Error& err) {
        fail(err);
    } catch (const std::exception& e) {
        nlohmann::json j;
        j["error"] = "Internal";
        j["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 0;
}
