#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "liecp/json_io.hpp"
#include "liecp/pencil.hpp"
#include "liecp/reconstruct.hpp"
#include "liecp/selftest.hpp"

namespace {

std::int64_t parse_int64(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw liecp::ParseError(std::string(what) + ": expected an integer, got '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

liecp::Weight parse_weight(const std::string& text, int rank) {
    liecp::Weight w;
    for (const std::string& part : split(text, ','))
        w.coords.push_back(parse_int64(part, "weight coordinate"));
    if (static_cast<int>(w.coords.size()) != rank) {
        std::ostringstream msg;
        msg << "weight '" << text << "' has " << w.coords.size() << " coordinates; expected "
            << rank;
        throw liecp::ShapeError(msg.str());
    }
    return w;
}

// "1,0" or "1,0:3" (an optional multiplicity after the colon)
std::pair<liecp::Weight, std::int64_t> parse_weight_mult(const std::string& text, int rank) {
    std::string head = text;
    std::int64_t mult = 1;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        head = text.substr(0, colon);
        mult = parse_int64(text.substr(colon + 1), "multiplicity");
        if (mult < 1) throw liecp::ParseError("multiplicity must be a positive integer");
    }
    return {parse_weight(head, rank), mult};
}

liecp::Family parse_family(const std::string& type) {
    if (type.size() != 1) throw liecp::UnsupportedType("unsupported type '" + type + "'");
    return liecp::family_from_char(type[0]);
}

std::int64_t resolve_dim_cap(std::int64_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("LIECP_DIM_CAP")) {
        const std::int64_t v = parse_int64(env, "LIECP_DIM_CAP");
        if (v < 1) throw liecp::ParseError("LIECP_DIM_CAP must be a positive integer");
        return v;
    }
    return liecp::kDefaultDimCap;
}

liecp::CharPoly charpoly_from_args(const liecp::RootSystem& rs,
                                   const std::vector<std::string>& weight_args) {
    liecp::CharPoly f;
    f.tag = rs.tag();
    for (const std::string& arg : weight_args) {
        const auto [w, mult] = parse_weight_mult(arg, rs.rank());
        f.entries[w] += mult;
    }
    return f;
}

liecp::Json charpoly_output(const liecp::RootSystem& rs, const liecp::CharPoly& f) {
    liecp::Json out;
    out["type"] = to_string(rs.tag());
    out["charpoly"] = liecp::decomposition_to_json(f);
    out["dim"] = liecp::total_dim(rs, f).str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic polynomials of simple Lie algebra representations"};
    app.require_subcommand(1);
    int rc = 0;

    std::string type = "A";
    int rank = 1;
    std::int64_t dim_cap_flag = 0;
    auto add_type_rank = [&](CLI::App* cmd) {
        cmd->add_option("--type", type, "root system family, one of A..G")->required();
        cmd->add_option("--rank", rank, "root system rank")->required();
    };
    auto add_dim_cap = [&](CLI::App* cmd) {
        cmd->add_option("--dim-cap", dim_cap_flag,
                        "dimension refusal threshold (default 1000000; env LIECP_DIM_CAP)");
    };

    // rootsys
    CLI::App* rootsys = app.add_subcommand("rootsys", "dump a root system as JSON");
    add_type_rank(rootsys);
    rootsys->callback([&] {
        const liecp::RootSystem rs = liecp::RootSystem::build(parse_family(type), rank);
        std::cout << liecp::dump_json(liecp::rootsys_to_json(rs));
    });

    // charpoly
    std::vector<std::string> weight_args;
    CLI::App* charpoly = app.add_subcommand(
        "charpoly", "canonical characteristic polynomial of a direct sum of irreducibles");
    add_type_rank(charpoly);
    add_dim_cap(charpoly);
    charpoly->add_option("--weight", weight_args, "highest weight 'c1,c2,...' or 'c1,c2:mult'")
        ->required();
    charpoly->callback([&] {
        const liecp::RootSystem rs = liecp::RootSystem::build(parse_family(type), rank);
        const liecp::CharPoly f = charpoly_from_args(rs, weight_args);
        const std::int64_t cap = resolve_dim_cap(dim_cap_flag);
        for (const auto& [w, mult] : f.entries) {
            (void)mult;
            liecp::check_dim_cap(rs, w, cap);  // also rejects non-dominant weights
        }
        std::cout << liecp::dump_json(charpoly_output(rs, f));
    });

    // linearize
    CLI::App* linearize = app.add_subcommand(
        "linearize", "factor a characteristic polynomial into its linear factors (weights)");
    add_type_rank(linearize);
    add_dim_cap(linearize);
    linearize->add_option("--weight", weight_args, "highest weight 'c1,c2,...' or 'c1,c2:mult'")
        ->required();
    linearize->callback([&] {
        const liecp::RootSystem rs = liecp::RootSystem::build(parse_family(type), rank);
        const liecp::CharPoly f = charpoly_from_args(rs, weight_args);
        const liecp::LinearFactors factors =
            liecp::linearize(rs, f, resolve_dim_cap(dim_cap_flag));
        liecp::Json out;
        out["type"] = to_string(rs.tag());
        out["degree"] = factors.total();
        out["factors"] = liecp::multiset_to_json(factors);
        std::cout << liecp::dump_json(out);
    });

    // decompose
    std::string input_path;
    CLI::App* decompose =
        app.add_subcommand("decompose", "recover the decomposition from a linear-factor file");
    add_type_rank(decompose);
    add_dim_cap(decompose);
    decompose->add_option("--input", input_path, "JSON file with the factor multiset")
        ->required();
    decompose->callback([&] {
        const liecp::RootSystem rs = liecp::RootSystem::build(parse_family(type), rank);
        std::ifstream in(input_path, std::ios::binary);
        if (!in) throw liecp::Error("cannot read '" + input_path + "'");
        liecp::Json j;
        try {
            j = liecp::Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw liecp::ParseError(std::string("invalid JSON in '") + input_path + "': " +
                                    e.what());
        }
        const liecp::WeightMultiset gamma = liecp::multiset_from_json(j, rs.tag());
        const liecp::CharPoly f = liecp::decompose(rs, gamma, resolve_dim_cap(dim_cap_flag));
        liecp::Json out;
        out["type"] = to_string(rs.tag());
        out["charpoly"] = liecp::decomposition_to_json(f);
        std::cout << liecp::dump_json(out);
    });

    // product
    std::vector<std::string> left_args, right_args;
    CLI::App* product = app.add_subcommand(
        "product", "multiply two characteristic polynomials (tensor product decomposition)");
    add_type_rank(product);
    add_dim_cap(product);
    product->add_option("--left", left_args, "highest weight of a left factor")->required();
    product->add_option("--right", right_args, "highest weight of a right factor")->required();
    product->callback([&] {
        const liecp::RootSystem rs = liecp::RootSystem::build(parse_family(type), rank);
        const liecp::CharPoly f = charpoly_from_args(rs, left_args);
        const liecp::CharPoly g = charpoly_from_args(rs, right_args);
        const liecp::CharPoly fg =
            liecp::product_on_charpoly(rs, f, g, resolve_dim_cap(dim_cap_flag));
        std::cout << liecp::dump_json(charpoly_output(rs, fg));
    });

    // sl2-table
    bool as_json = false;
    bool as_markdown = false;
    CLI::App* table = app.add_subcommand(
        "sl2-table", "audit the built-in eigenvalue-count reference table (all rows)");
    CLI::Option* json_opt = table->add_flag("--json", as_json, "emit the audit as JSON");
    table->add_flag("--markdown", as_markdown, "emit the audit as a markdown table (default)")
        ->excludes(json_opt);
    table->callback([&] {
        const std::vector<liecp::EmbeddingReport> audit = liecp::reference_table_audit();
        if (as_json)
            std::cout << liecp::dump_json(liecp::audit_to_json(audit));
        else
            std::cout << liecp::audit_to_markdown(audit);
    });

    // sl2-embed
    std::string root_class = "long";
    CLI::App* embed = app.add_subcommand(
        "sl2-embed", "eigenvalue counts for the sl2 triple of a long or short root");
    add_type_rank(embed);
    embed->add_option("--class", root_class, "root class: long or short")
        ->check(CLI::IsMember({"long", "short"}));
    embed->callback([&] {
        const liecp::RootSystem rs = liecp::RootSystem::build(parse_family(type), rank);
        const liecp::RootClass cls =
            root_class == "long" ? liecp::RootClass::Long : liecp::RootClass::Short;
        const liecp::EmbeddingReport report = liecp::embed_report(rs, cls);
        liecp::Json out = liecp::report_to_json(report);
        out["charpoly"] = liecp::embed_charpoly(report).factored_text();
        std::cout << liecp::dump_json(out);
    });

    // borel
    bool dump_matrix = false;
    CLI::App* borel = app.add_subcommand(
        "borel", "spectral matrix of the Borel subalgebra and its rank check");
    add_type_rank(borel);
    borel->add_flag("--dump-matrix", dump_matrix, "emit the spectral matrix as JSON");
    borel->callback([&] {
        const liecp::RootSystem rs = liecp::RootSystem::build(parse_family(type), rank);
        const liecp::RationalMatrix m = liecp::spectral_matrix(rs);
        const std::size_t r = liecp::rank_over_rationals(m);
        const bool pass = r == static_cast<std::size_t>(rs.rank());
        if (dump_matrix) {
            liecp::Json out;
            out["type"] = to_string(rs.tag());
            out["positive_roots"] = rs.positive_roots().size();
            out["cartan_dim"] = rs.rank();
            out["rank"] = r;
            out["pass"] = pass;
            out["matrix"] = liecp::matrix_to_json(m);
            std::cout << liecp::dump_json(out);
        } else {
            std::cout << "positive_roots = " << rs.positive_roots().size() << "\n";
            std::cout << "cartan_dim = " << rs.rank() << "\n";
            if (pass)
                std::cout << "rank(lambda_B) = " << r << " = dim h : PASS\n";
            else
                std::cout << "rank(lambda_B) = " << r << " != dim h = " << rs.rank()
                          << " : FAIL\n";
        }
        if (!pass) rc = 1;
    });

    // verify-sl2
    std::int64_t m_value = 0;
    CLI::App* verify_sl2 = app.add_subcommand(
        "verify-sl2", "check the pencil determinant against the closed form for one m");
    verify_sl2->add_option("--m", m_value, "highest weight of the irreducible sl2 module")
        ->required();
    verify_sl2->callback([&] {
        const liecp::SparsePoly oracle = liecp::det_pencil(liecp::sl2_matrices(m_value));
        const liecp::Sl2CharPoly closed = liecp::sl2_irrep_closed_form(m_value);
        std::cout << "oracle:      " << oracle.to_string() << "\n";
        std::cout << "closed form: " << closed.factored_text() << "\n";
        const bool pass = oracle == closed.expand();
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
        if (!pass) rc = 1;
    });

    // verify-basechange
    std::uint64_t seed = 0;
    int count = 50;
    CLI::App* verify_bc = app.add_subcommand(
        "verify-basechange", "randomized determinant identity checks under a change of basis");
    verify_bc->add_option("--m", m_value, "highest weight of the irreducible sl2 module")
        ->required();
    verify_bc->add_option("--seed", seed, "random seed (default 0)");
    verify_bc->add_option("--count", count, "number of random base changes (default 50)")
        ->check(CLI::PositiveNumber);
    verify_bc->callback([&] {
        std::mt19937_64 rng(seed);
        const liecp::MatrixPencil p = liecp::sl2_matrices(m_value);
        for (int trial = 0; trial < count; ++trial) {
            liecp::RationalMatrix b(3, 3);
            do {
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        b.at(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
            } while (liecp::det_over_rationals(b) == 0);
            if (!liecp::verify_base_change(p, b)) {
                std::cout << "trial " << trial << ": FAIL\n";
                rc = 1;
                return;
            }
        }
        std::cout << count << "/" << count << " base-change checks passed (m = " << m_value
                  << ", seed = " << seed << ")\n";
    });

    // selftest
    std::string golden_path;
    CLI::App* selftest =
        app.add_subcommand("selftest", "run the full acceptance suite (one line per criterion)");
    selftest->add_option("--golden", golden_path,
                         "frozen audit report to compare byte-for-byte");
    selftest->callback([&] {
        liecp::SelftestOptions opts;
        opts.golden_path = golden_path;
        const int failures = liecp::report(std::cout, liecp::run_acceptance(opts));
        if (failures > 0) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const liecp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
