#pragma once

#include "specbasis/hadamard_extract.hpp"
#include "specbasis/io.hpp"
#include "specbasis/specbasis.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace specbasis::cli {

/// Exit codes: 0 success / verdict pass, 1 verdict fail, 2 usage error,
/// 3 I/O or validation error.
enum ExitCode : int { kOk = 0, kVerdictFail = 1, kUsage = 2, kIoError = 3 };

namespace detail {

inline HMatrix load_hmatrix_any(const std::string& path) {
    const std::string text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return hmatrix_from_json(json::parse(text));
    return hmatrix_from_text(text);
}

inline void emit_report(const VerificationReport& rep, const std::string& out_path,
                        const std::string& format) {
    if (!out_path.empty()) write_text_file(out_path, report_to_json(rep).dump(2) + "\n");
    if (format == "json")
        std::cout << report_to_json(rep).dump(2) << '\n';
    else
        std::cout << report_to_text(rep);
}

// Hadamard files: the +/- text grid when the path ends in .txt, JSON otherwise.
inline void save_hmatrix_any(const std::string& path, const HMatrix& h) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".txt")
        write_text_file(path, hmatrix_to_text(h));
    else
        write_text_file(path, hmatrix_to_json(h).dump() + "\n");
}

inline Cyclotomic random_cyclotomic(int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    Cyclotomic z(m);
    for (int d = 0; d < m; ++d) z.coeff(d) = Rational(num(rng), den(rng));
    return z;
}

inline CycMatrix random_cyc_matrix(int n, int m, std::mt19937_64& rng) {
    CycMatrix a(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = random_cyclotomic(m, rng);
    return a;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
    CLI::App app{"specbasis: complete orthogonal matrix bases, pseudo-closure, and the "
                 "matrix Fourier transform"};
    app.require_subcommand(1);

    double tol = kDefaultTol;
    app.add_option("--tol", tol, "comparison tolerance (relative Frobenius)")
        ->envname("SPECBASIS_TOL")
        ->check(CLI::PositiveNumber);

    std::string format = "text";
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));

    std::uint64_t seed = 12345;
    app.add_option("--seed", seed, "seed for sampled checks");

    int exit_code = kOk;

    // ------------------------------------------------------------ basis
    auto* basis_cmd = app.add_subcommand("basis", "construct and verify bases");
    basis_cmd->require_subcommand(1);
    {
        auto* gen = basis_cmd->add_subcommand("gen", "construct a basis and write it as JSON");
        auto kind = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto unitary_path = std::make_shared<std::string>();
        auto hadamard_path = std::make_shared<std::string>();
        auto msyl = std::make_shared<int>(-1);
        auto out = std::make_shared<std::string>();
        gen->add_option("--kind", *kind, "canonical|fourier|unitary|hadamard")
            ->required()
            ->check(CLI::IsMember({"canonical", "fourier", "unitary", "hadamard"}));
        gen->add_option("--n", *n, "dimension")->check(CLI::Range(1, 4096));
        gen->add_option("--unitary", *unitary_path, "unitary matrix file (kind=unitary)");
        gen->add_option("--hadamard", *hadamard_path, "Hadamard matrix file (kind=hadamard)");
        gen->add_option("--m", *msyl, "Sylvester doubling exponent (kind=hadamard)")
            ->check(CLI::Range(0, 20));
        gen->add_option("--out", *out, "output path")->required();
        gen->callback([&, kind, n, unitary_path, hadamard_path, msyl, out]() {
            BasisSet b;
            if (*kind == "canonical" || *kind == "fourier") {
                if (*n < 1) throw CLI::ValidationError("--n is required for kind " + *kind);
                b = (*kind == "canonical") ? canonical_basis(*n) : fourier_basis(*n);
            } else if (*kind == "unitary") {
                if (unitary_path->empty())
                    throw CLI::ValidationError("--unitary is required for kind unitary");
                b = unitary_basis(load_cmatrix(*unitary_path), tol);
            } else {
                HMatrix h;
                if (!hadamard_path->empty())
                    h = detail::load_hmatrix_any(*hadamard_path);
                else if (*msyl >= 0)
                    h = sylvester(*msyl);
                else
                    throw CLI::ValidationError("kind hadamard needs --hadamard or --m");
                b = hadamard_basis(h);
            }
            save_basis(*out, b);
            std::cout << "wrote " << to_string(b.kind) << " basis, n=" << b.n << ", to " << *out
                      << '\n';
        });

        auto* verify = basis_cmd->add_subcommand(
            "verify", "orthogonality/completeness and full-rank checks on a stored basis");
        auto basis_path = std::make_shared<std::string>();
        auto rep_out = std::make_shared<std::string>();
        verify->add_option("--basis", *basis_path, "basis JSON file")->required();
        verify->add_option("--out", *rep_out, "write the JSON report here");
        verify->callback([&, basis_path, rep_out]() {
            const BasisSet b = load_basis(*basis_path);
            VerificationReport rep = verify_orthogonal_complete(b, tol);
            for (auto& c : verify_full_rank(b).checks) rep.checks.push_back(c);
            detail::emit_report(rep, *rep_out, format);
            exit_code = rep.summary() ? kOk : kVerdictFail;
        });

        auto* dft = basis_cmd->add_subcommand(
            "dft", "sum of B(k,k): scaled unitarity and the chirp relation to the DFT");
        auto n2 = std::make_shared<int>(0);
        auto mat_out = std::make_shared<std::string>();
        auto rep_out2 = std::make_shared<std::string>();
        dft->add_option("--n", *n2, "dimension")->required()->check(CLI::Range(1, 4096));
        dft->add_option("--out", *mat_out, "write the matrix here");
        dft->add_option("--report-out", *rep_out2, "write the JSON report here");
        dft->callback([&, n2, mat_out, rep_out2]() {
            auto [m, rep] = dft_from_fourier_basis(*n2);
            if (!mat_out->empty()) save_cmatrix(*mat_out, m);
            detail::emit_report(rep, *rep_out2, format);
            exit_code = rep.summary() ? kOk : kVerdictFail;
        });
    }

    // -------------------------------------------------------- transform
    auto* tr_cmd = app.add_subcommand("transform", "matrix Fourier transform operations");
    tr_cmd->require_subcommand(1);
    {
        auto* an = tr_cmd->add_subcommand("analyze", "expansion coefficients in a basis");
        auto mat = std::make_shared<std::string>(), bas = std::make_shared<std::string>(),
             out = std::make_shared<std::string>();
        an->add_option("--matrix", *mat)->required();
        an->add_option("--basis", *bas)->required();
        an->add_option("--out", *out)->required();
        an->callback([&, mat, bas, out]() {
            const CoeffTable c = analyze(load_cmatrix(*mat), load_basis(*bas));
            write_text_file(*out, coeffs_to_json(c).dump(2) + "\n");
        });

        auto* sy = tr_cmd->add_subcommand("synthesize", "rebuild a matrix from coefficients");
        auto co = std::make_shared<std::string>(), bas2 = std::make_shared<std::string>(),
             out2 = std::make_shared<std::string>();
        sy->add_option("--coeffs", *co)->required();
        sy->add_option("--basis", *bas2)->required();
        sy->add_option("--out", *out2)->required();
        sy->callback([&, co, bas2, out2]() {
            const CMatrix a =
                synthesize(coeffs_from_json(parse_json_file(*co)), load_basis(*bas2));
            save_cmatrix(*out2, a);
        });

        auto* mu = tr_cmd->add_subcommand(
            "multiply", "product through the twisted convolution, checked against the direct one");
        auto pa = std::make_shared<std::string>(), pb = std::make_shared<std::string>(),
             out3 = std::make_shared<std::string>();
        mu->add_option("--a", *pa)->required();
        mu->add_option("--b", *pb)->required();
        mu->add_option("--out", *out3)->required();
        mu->callback([&, pa, pb, out3]() {
            const CMatrix a = load_cmatrix(*pa), b = load_cmatrix(*pb);
            const CMatrix via = multiply_via_transform(a, b);
            const CMatrix direct = a * b;
            const double residual = (via - direct).norm() / std::max(1.0, direct.norm());
            save_cmatrix(*out3, via);
            std::cout << "residual vs direct product: " << residual << '\n';
            exit_code = residual <= tol ? kOk : kVerdictFail;
        });
    }

    // ---------------------------------------------------------- closure
    auto* cl_cmd = app.add_subcommand("closure", "pseudo-closure checks");
    cl_cmd->require_subcommand(1);
    {
        auto* check = cl_cmd->add_subcommand("check", "closure verdict at a fixed order k");
        auto bas = std::make_shared<std::string>(), out = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto no_wit = std::make_shared<bool>(false);
        check->add_option("--basis", *bas)->required();
        check->add_option("--k", *k, "closure order")->required()->check(CLI::Range(1, 1 << 20));
        check->add_option("--out", *out, "write the JSON report here");
        check->add_flag("--no-witnesses", *no_wit, "omit witnesses from the report");
        check->callback([&, bas, out, k, no_wit]() {
            const ClosureReport rep = check_pseudo_closure(load_basis(*bas), *k, tol);
            const json j = closure_report_to_json(rep, !*no_wit);
            if (!out->empty()) write_text_file(*out, j.dump(2) + "\n");
            if (format == "json") {
                std::cout << closure_report_to_json(rep, false).dump(2) << '\n';
            } else {
                double worst = 0.0;
                for (const auto& w : rep.witnesses) worst = std::max(worst, w.residual);
                std::cout << "k=" << rep.k << " eligible_elements=" << rep.eligible_elements
                          << " eligible_pairs=" << rep.eligible_pairs << "/" << rep.total_pairs
                          << " failures=" << rep.failures.size()
                          << " worst_witness_residual=" << worst
                          << " verdict=" << (rep.verdict() ? "PASS" : "FAIL") << '\n';
            }
            exit_code = rep.verdict() ? kOk : kVerdictFail;
        });

        auto* order = cl_cmd->add_subcommand("order", "smallest passing closure order <= k-max");
        auto bas2 = std::make_shared<std::string>();
        auto kmax = std::make_shared<int>(0);
        order->add_option("--basis", *bas2)->required();
        order->add_option("--k-max", *kmax)->required()->check(CLI::Range(1, 1 << 20));
        order->callback([&, bas2, kmax]() {
            const BasisSet b = load_basis(*bas2);
            for (int kk = 1; kk <= *kmax; ++kk) {
                const ClosureReport rep = check_pseudo_closure(b, kk, tol);
                std::cout << "k=" << kk << " verdict=" << (rep.verdict() ? "PASS" : "FAIL")
                          << " eligible_pairs=" << rep.eligible_pairs << "/" << rep.total_pairs
                          << '\n';
            }
            const auto smallest = pseudo_closure_order(b, *kmax, tol);
            if (smallest)
                std::cout << "smallest passing order: " << *smallest << '\n';
            else
                std::cout << "no passing order <= " << *kmax << '\n';
            exit_code = smallest ? kOk : kVerdictFail;
        });
    }

    // --------------------------------------------------------- hadamard
    auto* ha_cmd = app.add_subcommand("hadamard", "Hadamard matrices");
    ha_cmd->require_subcommand(1);
    {
        auto* gen = ha_cmd->add_subcommand("gen", "Sylvester construction of order 2^m");
        auto m = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        gen->add_option("--m", *m, "doubling exponent")->required()->check(CLI::Range(0, 20));
        gen->add_option("--out", *out)->required();
        gen->callback([&, m, out]() {
            const HMatrix h = sylvester(*m);
            detail::save_hmatrix_any(*out, h);
            std::cout << "wrote order-" << h.n << " Hadamard matrix to " << *out << '\n';
        });

        auto* ver = ha_cmd->add_subcommand("verify", "exact integer Hadamard checks");
        auto path = std::make_shared<std::string>(), out2 = std::make_shared<std::string>();
        ver->add_option("--in", *path, "Hadamard matrix file (JSON or +/- text)")->required();
        ver->add_option("--out", *out2, "write the JSON report here");
        ver->callback([&, path, out2]() {
            const VerificationReport rep = verify_hadamard(detail::load_hmatrix_any(*path));
            detail::emit_report(rep, *out2, format);
            exit_code = rep.summary() ? kOk : kVerdictFail;
        });

        auto* ext = ha_cmd->add_subcommand(
            "extract", "recover a Hadamard matrix from a 2-pseudo-closed basis");
        auto bas = std::make_shared<std::string>(), out3 = std::make_shared<std::string>(),
             rep_out = std::make_shared<std::string>();
        ext->add_option("--basis", *bas)->required();
        ext->add_option("--out", *out3, "write the recovered matrix here");
        ext->add_option("--report-out", *rep_out, "write the JSON report here");
        ext->callback([&, bas, out3, rep_out]() {
            const HadamardExtraction got = extract_hadamard(load_basis(*bas), tol);
            detail::emit_report(got.report, *rep_out, format);
            if (got.matrix) {
                if (!out3->empty()) detail::save_hmatrix_any(*out3, *got.matrix);
                exit_code = kOk;
            } else {
                exit_code = kVerdictFail;
            }
        });
    }

    // ------------------------------------------------------------ group
    auto* gr_cmd = app.add_subcommand("group", "finite group enumeration");
    gr_cmd->require_subcommand(1);
    {
        auto* en = gr_cmd->add_subcommand("enumerate", "BFS closure of a generating family");
        auto kind = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0), m = std::make_shared<int>(-1);
        auto hpath = std::make_shared<std::string>(), out = std::make_shared<std::string>();
        auto cap = std::make_shared<std::size_t>(1u << 20);
        en->add_option("--kind", *kind, "fourier|hadamard")
            ->required()
            ->check(CLI::IsMember({"fourier", "hadamard"}));
        en->add_option("--n", *n, "dimension (kind=fourier)")->check(CLI::Range(1, 4096));
        en->add_option("--m", *m, "Sylvester exponent (kind=hadamard)")
            ->check(CLI::Range(0, 20));
        en->add_option("--hadamard", *hpath, "Hadamard matrix file (kind=hadamard)");
        en->add_option("--cap", *cap, "enumeration cap")->check(CLI::Range(std::size_t(1), std::size_t(1) << 30));
        en->add_option("--out", *out, "write the group table here");
        en->callback([&, kind, n, m, hpath, out, cap]() {
            GroupTable table;
            double bound = 0.0;
            if (*kind == "fourier") {
                if (*n < 1) throw CLI::ValidationError("--n is required for kind fourier");
                table = fourier_group(*n, *cap);
                bound = std::pow(double(*n), double(*n + 1));
            } else {
                HMatrix h;
                if (!hpath->empty())
                    h = detail::load_hmatrix_any(*hpath);
                else if (*m >= 0)
                    h = sylvester(*m);
                else
                    throw CLI::ValidationError("kind hadamard needs --hadamard or --m");
                table = hadamard_group(h, *cap);
                bound = double(h.n) * std::pow(2.0, double(h.n));
            }
            if (!out->empty()) write_text_file(*out, group_table_to_json(table).dump() + "\n");
            std::cout << "order=" << table.order() << " bound=" << bound
                      << " closed=" << (table.closed ? "yes" : "no (cap exceeded)") << '\n';
            exit_code = table.closed ? kOk : kVerdictFail;
        });
    }

    // -------------------------------------------------------------- rep
    auto* rep_cmd = app.add_subcommand("rep", "permutation representations");
    rep_cmd->require_subcommand(1);
    {
        auto* t = rep_cmd->add_subcommand("t", "clock-and-shift representation (n^2 x n^2)");
        auto mono = std::make_shared<std::string>(), mat = std::make_shared<std::string>(),
             out = std::make_shared<std::string>();
        auto dense = std::make_shared<bool>(false);
        t->add_option("--monomial", *mono, "group element as monomial JSON");
        t->add_option("--matrix", *mat, "arbitrary matrix (linear extension)");
        t->add_option("--out", *out)->required();
        t->add_flag("--dense", *dense, "write a dense matrix instead of sparse triplets");
        t->callback([&, mono, mat, out, dense]() {
            if (mono->empty() == mat->empty())
                throw CLI::ValidationError("rep t needs exactly one of --monomial / --matrix");
            const CMatrix img = mono->empty()
                                    ? rep_t_linear(load_cmatrix(*mat))
                                    : rep_t(monomial_from_json(parse_json_file(*mono)));
            write_text_file(*out, (*dense ? cmatrix_to_json(img) : cmatrix_to_sparse_json(img))
                                          .dump() +
                                      "\n");
        });

        auto* r = rep_cmd->add_subcommand("r", "Hadamard-group representation (2n x 2n)");
        auto mono2 = std::make_shared<std::string>(), mat2 = std::make_shared<std::string>(),
             hpath = std::make_shared<std::string>(), out2 = std::make_shared<std::string>();
        auto dense2 = std::make_shared<bool>(false);
        r->add_option("--monomial", *mono2, "signed permutation as monomial JSON (group map)");
        r->add_option("--matrix", *mat2, "arbitrary matrix (linear-extension map)");
        r->add_option("--hadamard", *hpath, "Hadamard matrix file (required with --matrix)");
        r->add_option("--out", *out2)->required();
        r->add_flag("--dense", *dense2, "write a dense matrix instead of sparse triplets");
        r->callback([&, mono2, mat2, hpath, out2, dense2]() {
            if (mono2->empty() == mat2->empty())
                throw CLI::ValidationError("rep r needs exactly one of --monomial / --matrix");
            CMatrix img;
            if (!mono2->empty()) {
                img = rep_r_monomial(monomial_from_json(parse_json_file(*mono2)));
            } else {
                if (hpath->empty())
                    throw CLI::ValidationError("rep r --matrix needs --hadamard");
                img = rep_r(load_cmatrix(*mat2), detail::load_hmatrix_any(*hpath));
            }
            write_text_file(*out2, (*dense2 ? cmatrix_to_json(img) : cmatrix_to_sparse_json(img))
                                           .dump() +
                                       "\n");
        });

        auto* ch = rep_cmd->add_subcommand("check-hom", "per-identity homomorphism report");
        auto map = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0), m = std::make_shared<int>(-1);
        auto samples = std::make_shared<int>(50);
        auto hpath2 = std::make_shared<std::string>(), out3 = std::make_shared<std::string>();
        ch->add_option("--map", *map, "T_group|T_linear|R")
            ->required()
            ->check(CLI::IsMember({"T_group", "T_linear", "R"}));
        ch->add_option("--n", *n, "dimension (T maps)")->check(CLI::Range(1, 4096));
        ch->add_option("--m", *m, "Sylvester exponent (R map)")->check(CLI::Range(0, 20));
        ch->add_option("--hadamard", *hpath2, "Hadamard matrix file (R map)");
        ch->add_option("--samples", *samples)->check(CLI::Range(1, 1 << 20));
        ch->add_option("--out", *out3, "write the JSON report here");
        ch->callback([&, map, n, m, samples, hpath2, out3]() {
            const MapKind kind = map_kind_from_string(*map);
            std::optional<HMatrix> h;
            if (kind == MapKind::r_map) {
                if (!hpath2->empty())
                    h = detail::load_hmatrix_any(*hpath2);
                else if (*m >= 0)
                    h = sylvester(*m);
                else
                    throw CLI::ValidationError("map R needs --hadamard or --m");
            } else if (*n < 1) {
                throw CLI::ValidationError("--n is required for the T maps");
            }
            const VerificationReport rep =
                check_homomorphism(kind, *n, h ? &*h : nullptr, *samples, seed, tol);
            detail::emit_report(rep, *out3, format);
            exit_code = rep.summary() ? kOk : kVerdictFail;
        });
    }

    // ------------------------------------------------------------ cyclo
    auto* cy_cmd = app.add_subcommand(
        "cyclo", "complex-free arithmetic through the rational circulant encoding");
    cy_cmd->require_subcommand(1);
    {
        auto* demo = cy_cmd->add_subcommand(
            "demo", "exact matrix products over Q[w_m] without complex numbers");
        auto n = std::make_shared<int>(3), m = std::make_shared<int>(3);
        auto samples = std::make_shared<int>(50);
        demo->add_option("--n", *n, "matrix dimension")->check(CLI::Range(1, 4096));
        demo->add_option("--m", *m, "root-of-unity order")->check(CLI::Range(1, 4096));
        demo->add_option("--samples", *samples)->check(CLI::Range(1, 1 << 20));
        demo->callback([&, n, m, samples]() {
            std::mt19937_64 rng(seed);
            int exact = 0;
            for (int s = 0; s < *samples; ++s) {
                const CycMatrix a = detail::random_cyc_matrix(*n, *m, rng);
                const CycMatrix b = detail::random_cyc_matrix(*n, *m, rng);
                const CycMatrix direct = a * b;
                const CycMatrix via = cyclotomic_decode(
                    cyclotomic_encode(a) * cyclotomic_encode(b), *n, *m);
                if (via == direct) ++exact;
            }
            std::cout << "random pairs exactly recovered: " << exact << "/" << *samples << '\n';
            bool dft_ok = true;
            if (*n == *m) {
                // the phased DFT matrix has entries in Z[w_n]; multiply it
                // complex-free against a random matrix over Q[w_n]
                CycMatrix dft(*n, *m);
                for (int aa = 0; aa < *n; ++aa)
                    for (int bb = 0; bb < *n; ++bb)
                        dft(aa, bb) = Cyclotomic::root(
                            *m, static_cast<long long>(aa) * ((bb - aa) % *n + *n));
                const CycMatrix x = detail::random_cyc_matrix(*n, *m, rng);
                dft_ok = cyclotomic_decode(cyclotomic_encode(dft) * cyclotomic_encode(x), *n,
                                           *m) == dft * x;
                std::cout << "phased-DFT product recovered exactly: " << (dft_ok ? "yes" : "no")
                          << '\n';
            }
            exit_code = (exact == *samples && dft_ok) ? kOk : kVerdictFail;
        });
    }

    // ------------------------------------------------------------ bench
    {
        auto* bench = app.add_subcommand(
            "bench", "direct product vs transform-domain multiplication timings");
        auto sizes = std::make_shared<std::vector<int>>();
        auto reps = std::make_shared<int>(5);
        auto out = std::make_shared<std::string>();
        bench->add_option("--sizes", *sizes, "dimensions to time")
            ->required()
            ->delimiter(',')
            ->check(CLI::Range(1, 512));
        bench->add_option("--reps", *reps, "repetitions per dimension")
            ->check(CLI::Range(3, 1000000));
        bench->add_option("--out", *out, "CSV output path")->required();
        bench->callback([&, sizes, reps, out]() {
            std::ofstream csv(*out);
            if (!csv) throw std::runtime_error("cannot open for writing: " + *out);
            const auto records = bench_multiply(*sizes, *reps, &csv, seed);
            double worst = 0.0;
            for (const auto& r : records) {
                std::cout << "n=" << r.n << " method=" << r.method
                          << " median_wall_time_s=" << r.wall_time_s
                          << " max_residual=" << r.max_residual << '\n';
                worst = std::max(worst, r.max_residual);
            }
            std::cout << "csv written to " << *out << '\n';
            exit_code = worst <= tol ? kOk : kVerdictFail;
        });
    }

    std::vector<const char*> argv;
    argv.push_back("specbasis");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return exit_code;
}

}  // namespace specbasis::cli
