#include "matred/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "matred/json_io.hpp"

namespace matred {

namespace {

Json load_json(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::string path = (!arg.empty() && arg.front() == '@') ? arg.substr(1) : arg;
        std::ifstream in(path);
        if (!in) throw Error(Errc::InvalidInput, "cannot open input file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(Errc::InvalidInput, "malformed JSON input");
    return j;
}

std::vector<std::uint64_t> parse_int_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoull(tok));
    }
    return out;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error(Errc::InvalidInput, "cannot open output file: " + out_path);
        f << text;
    }
}

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error(Errc::InvalidInput, "cannot open output file: " + out_path);
        f << text;
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string compare_table(const std::vector<CompareReport>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "n,q,this_paper_log2,biswas_yang_log2,sl_order_log2,assembly_log2,d\n";
        for (const auto& r : rows) {
            os << r.n << ',' << r.q << ',' << fmt_double(r.this_paper_log2) << ','
               << fmt_double(r.biswas_yang_log2) << ',' << fmt_double(r.sl_order_log2) << ','
               << fmt_double(r.assembly_log2) << ',' << r.prime_sum_d << '\n';
        }
        return os.str();
    }
    os << std::left << std::setw(8) << "n" << std::setw(8) << "q" << std::setw(18) << "this_paper"
       << std::setw(18) << "biswas_yang" << std::setw(18) << "log2|SL(n,q)|" << std::setw(18)
       << "assembly" << std::setw(6) << "d" << "  (all log2; O-constants = 1)\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(8) << r.n << std::setw(8) << r.q << std::setw(18)
           << fmt_double(r.this_paper_log2) << std::setw(18) << fmt_double(r.biswas_yang_log2)
           << std::setw(18) << fmt_double(r.sl_order_log2) << std::setw(18)
           << fmt_double(r.assembly_log2) << std::setw(6) << r.prime_sum_d << '\n';
    }
    return os.str();
}

struct CommonOpts {
    std::string out_path;
    std::uint64_t seed = 0;
    std::size_t cap_order = kDefaultGroupCap;
    std::size_t cap_exp_bits = kDefaultExpBitCeiling;
    std::uint64_t factor_bound = kDefaultFactorBound;
    std::string format = "json";
};

Field field_from_flags(std::uint64_t p, unsigned e, const std::string& modulus_csv) {
    if (!modulus_csv.empty()) return make_field(p, e, parse_int_list(modulus_csv));
    return build_field(p, e);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact finite-field matrix toolkit: degree reduction, Cayley graph "
                 "laboratory and diameter bound calculators"};
    app.fallthrough();

    CommonOpts opt;
    app.add_option("--out", opt.out_path, "write output to this file instead of stdout");
    app.add_option("--seed", opt.seed, "seed for randomized subroutines (outputs are canonical)");
    app.add_option("--cap-order", opt.cap_order, "group closure cap");
    app.add_option("--cap-exp-bits", opt.cap_exp_bits, "bit ceiling for direct matrix powering");
    app.add_option("--factor-bound", opt.factor_bound, "trial-division bound for integer factoring");
    app.add_option("--format", opt.format, "output format: json, table or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));

    // field
    auto* c_field = app.add_subcommand("field", "construct GF(p^e) deterministically");
    std::uint64_t f_p = 0;
    unsigned f_e = 1;
    std::string f_modulus;
    c_field->add_option("--p", f_p, "characteristic (prime)")->required();
    c_field->add_option("--e", f_e, "extension degree");
    c_field->add_option("--modulus", f_modulus, "comma-separated modulus, low degree first");

    // factor
    auto* c_factor = app.add_subcommand("factor", "factor a polynomial over GF(q)");
    std::string factor_in;
    c_factor->add_option("--in", factor_in, "polynomial (file, @file or inline JSON)")->required();

    // singer
    auto* c_singer = app.add_subcommand("singer", "Singer polynomial of degree d");
    std::uint64_t s_p = 0;
    unsigned s_e = 1, s_d = 1;
    std::string s_modulus;
    c_singer->add_option("--p", s_p, "characteristic (prime)")->required();
    c_singer->add_option("--e", s_e, "extension degree");
    c_singer->add_option("--modulus", s_modulus, "comma-separated modulus, low degree first");
    c_singer->add_option("--d", s_d, "target degree")->required();

    // jordan
    auto* c_jordan = app.add_subcommand("jordan", "generalized Jordan block structure");
    std::string jordan_in;
    c_jordan->add_option("--in", jordan_in, "matrix (file, @file or inline JSON)")->required();

    // reduce
    auto* c_reduce = app.add_subcommand("reduce", "degree-reduction certificate for a matrix");
    std::string reduce_in;
    c_reduce->add_option("--in", reduce_in, "matrix (file, @file or inline JSON)")->required();

    // verify
    auto* c_verify = app.add_subcommand("verify", "check a reduction certificate against its matrix");
    std::string verify_in, verify_cert;
    bool verify_direct = false;
    c_verify->add_option("--in", verify_in, "matrix (file, @file or inline JSON)")->required();
    c_verify->add_option("--cert", verify_cert, "certificate (file, @file or inline JSON)")->required();
    c_verify->add_flag("--direct", verify_direct, "additionally verify by direct matrix powering");

    // diameter
    auto* c_diam = app.add_subcommand("diameter", "Cayley graph diameter by BFS");
    std::string diam_gens;
    bool diam_exhaustive = false;
    c_diam->add_option("--gens", diam_gens, "generators (file, @file or inline JSON)")->required();
    c_diam->add_flag("--exhaustive", diam_exhaustive,
                     "maximize over all generating subsets (order <= 16)");

    // cover
    auto* c_cover = app.add_subcommand("cover", "conjugacy-class covering number");
    std::string cover_gens, cover_elem;
    std::uint64_t cover_kmax = kDefaultCoverKmax;
    c_cover->add_option("--gens", cover_gens, "generators (file, @file or inline JSON)")->required();
    c_cover->add_option("--elem", cover_elem, "group element (file, @file or inline JSON)")->required();
    c_cover->add_option("--kmax", cover_kmax, "budget for the number of conjugate factors");

    // lowdeg
    auto* c_lowdeg = app.add_subcommand("lowdeg", "shortest word with prescribed charpoly divisors");
    std::string lowdeg_gens, lowdeg_targets;
    c_lowdeg->add_option("--gens", lowdeg_gens, "generators (file, @file or inline JSON)")->required();
    c_lowdeg->add_option("--targets", lowdeg_targets, "target polynomials (file, @file or inline JSON)")
        ->required();

    // bounds
    auto* c_bounds = app.add_subcommand("bounds", "explicit bound calculators");
    c_bounds->require_subcommand(1);
    auto* b_compare = c_bounds->add_subcommand("compare", "diameter bound exponents, log2 space");
    std::uint64_t bc_n = 0, bc_q = 0, bc_qmax = 0;
    double bc_cmain = 1.0;
    b_compare->add_option("--n", bc_n, "dimension")->required();
    b_compare->add_option("--q", bc_q, "field size")->required();
    b_compare->add_option("--q-max", bc_qmax, "tabulate q from --q up to this value");
    b_compare->add_option("--c-main", bc_cmain, "O-constant for the main exponent");
    auto* b_sylow = c_bounds->add_subcommand("sylow", "Sylow chain bound for GL(m,q)");
    std::uint64_t bs_n = 0, bs_q = 0, bs_p = 0;
    b_sylow->add_option("--n", bs_n, "dimension")->required();
    b_sylow->add_option("--q", bs_q, "field size")->required();
    b_sylow->add_option("--p", bs_p, "characteristic")->required();
    auto* b_erdos = c_bounds->add_subcommand("erdos", "odd-primorial prime selection report");
    std::uint64_t be_n = 0;
    b_erdos->add_option("--n", be_n, "dimension")->required();

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("matred");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_field->parsed()) {
            emit(field_to_json(field_from_flags(f_p, f_e, f_modulus)), opt.out_path, out);
        } else if (c_factor->parsed()) {
            Polynomial p = polynomial_from_json(load_json(factor_in));
            if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
            emit(factorization_to_json(factor(p, opt.seed)), opt.out_path, out);
        } else if (c_singer->parsed()) {
            Field f = field_from_flags(s_p, s_e, s_modulus);
            emit(polynomial_to_json(singer_polynomial(f, s_d, opt.factor_bound)), opt.out_path, out);
        } else if (c_jordan->parsed()) {
            SquareMatrix a = matrix_from_json(load_json(jordan_in));
            emit(jordan_to_json(jordan_structure(a, opt.seed), a.field()), opt.out_path, out);
        } else if (c_reduce->parsed()) {
            SquareMatrix a = matrix_from_json(load_json(reduce_in));
            ReduceOptions ropts;
            ropts.factor_bound = opt.factor_bound;
            emit(certificate_to_json(reduce(a, opt.seed, ropts)), opt.out_path, out);
        } else if (c_verify->parsed()) {
            SquareMatrix a = matrix_from_json(load_json(verify_in));
            CertificateClaim claim = certificate_claim_from_json(load_json(verify_cert));
            ReduceOptions ropts;
            ropts.factor_bound = opt.factor_bound;
            ReductionCertificate fresh = reduce(a, opt.seed, ropts);
            auto mismatch = [&](const std::string& what, const std::string& claimed,
                               const std::string& recomputed) {
                throw Error(Errc::VerifyMismatch,
                            what + ": certificate has " + claimed + ", recomputed " + recomputed);
            };
            if (claim.n != fresh.n) mismatch("n", std::to_string(claim.n), std::to_string(fresh.n));
            if (claim.q != fresh.q) mismatch("q", std::to_string(claim.q), std::to_string(fresh.q));
            if (claim.hypothesis_ok != fresh.hypothesis_ok)
                mismatch("hypothesis_ok", claim.hypothesis_ok ? "true" : "false",
                         fresh.hypothesis_ok ? "true" : "false");
            if (claim.chosen_prime != fresh.chosen_prime)
                mismatch("chosen_prime", std::to_string(claim.chosen_prime),
                         std::to_string(fresh.chosen_prime));
            if (claim.a != fresh.a) mismatch("a", std::to_string(claim.a), std::to_string(fresh.a));
            if (claim.s_prime != fresh.s_prime)
                mismatch("s_prime", std::to_string(claim.s_prime), std::to_string(fresh.s_prime));
            if (claim.m != fresh.m) mismatch("m", "<" + std::to_string(bit_length(claim.m)) + " bits>",
                                             "<" + std::to_string(bit_length(fresh.m)) + " bits>");
            if (claim.purge_exponent != fresh.purge_exponent)
                mismatch("purge_exponent", claim.purge_exponent.get_str(),
                         fresh.purge_exponent.get_str());
            if (claim.predicted_degree != fresh.predicted_degree)
                mismatch("predicted_degree", std::to_string(claim.predicted_degree),
                         std::to_string(fresh.predicted_degree));
            if (claim.input_degree != fresh.input_degree)
                mismatch("input_degree", std::to_string(claim.input_degree),
                         std::to_string(fresh.input_degree));
            bool direct_ran = false;
            if (verify_direct) {
                Nat total = fresh.m * fresh.purge_exponent;
                SquareMatrix powered = mat_pow_big(a, total, opt.cap_exp_bits);
                std::size_t measured = degree(powered);
                if (measured != fresh.predicted_degree)
                    mismatch("direct degree", std::to_string(fresh.predicted_degree),
                             std::to_string(measured));
                direct_ran = true;
            }
            emit(Json{{"verified", true}, {"direct", direct_ran}}, opt.out_path, out);
        } else if (c_diam->parsed()) {
            auto gens = generators_from_json(load_json(diam_gens));
            if (diam_exhaustive) {
                GroupTable t = enumerate_group(gens, opt.cap_order);
                emit(diameter_report_to_json(exhaustive_group_diameter(t)), opt.out_path, out);
            } else {
                emit(diameter_report_to_json(bfs_diameter(gens, opt.cap_order)), opt.out_path, out);
            }
        } else if (c_cover->parsed()) {
            auto gens = generators_from_json(load_json(cover_gens));
            SquareMatrix a = matrix_from_json(load_json(cover_elem));
            GroupTable t = enumerate_group(gens, opt.cap_order);
            std::uint64_t k = class_covering_number(t, a, cover_kmax);
            emit(Json{{"covering_number", k}, {"group_order", t.order()}, {"kmax", cover_kmax}},
                 opt.out_path, out);
        } else if (c_lowdeg->parsed()) {
            auto gens = generators_from_json(load_json(lowdeg_gens));
            auto targets = targets_from_json(load_json(lowdeg_targets));
            emit(low_degree_word_to_json(find_low_degree_word(gens, targets, opt.cap_order)),
                 opt.out_path, out);
        } else if (b_compare->parsed()) {
            BoundConstants consts;
            consts.c_main = bc_cmain;
            std::vector<CompareReport> rows;
            std::uint64_t q_hi = bc_qmax == 0 ? bc_q : bc_qmax;
            for (std::uint64_t q = bc_q; q <= q_hi; ++q) rows.push_back(compare_bounds(bc_n, q, consts));
            if (opt.format == "json") {
                if (rows.size() == 1) {
                    emit(compare_report_to_json(rows[0]), opt.out_path, out);
                } else {
                    Json arr = Json::array();
                    for (const auto& r : rows) arr.push_back(compare_report_to_json(r));
                    emit(arr, opt.out_path, out);
                }
            } else {
                emit_text(compare_table(rows, opt.format), opt.out_path, out);
            }
        } else if (b_sylow->parsed()) {
            auto [spec, value] = sylow_chain_bound(bs_n, bs_q, bs_p);
            if (opt.format == "json") {
                emit(sylow_to_json(spec, value), opt.out_path, out);
            } else {
                std::ostringstream os;
                os << "m=" << spec.m << " r=" << spec.r << " ell=" << spec.ell
                   << (spec.r_clamped ? " (r clamped to 1)" : "") << " value=" << value.get_str()
                   << '\n';
                emit_text(os.str(), opt.out_path, out);
            }
        } else if (b_erdos->parsed()) {
            ErdosReport rep = erdos_report(be_n);
            if (opt.format == "json") {
                emit(erdos_report_to_json(rep), opt.out_path, out);
            } else {
                std::ostringstream os;
                os << "pbar=" << rep.pbar << " d=" << rep.prime_sum << " primes=" << rep.prime_count
                   << " product=" << rep.product.get_str()
                   << " d/((log2 n)^2/log2 log2 n)=" << fmt_double(rep.ratio_prime_sum)
                   << " pbar/log2 n=" << fmt_double(rep.ratio_pbar) << '\n';
                emit_text(os.str(), opt.out_path, out);
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace matred
