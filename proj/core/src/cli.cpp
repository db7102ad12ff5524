#include "krylovium/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "krylovium/io.hpp"
#include "krylovium/rng.hpp"
#include "krylovium/spectral.hpp"

namespace krylovium {

namespace {

Strategy parse_strategy(const std::string& s) {
    if (s == "hybrid") return Strategy::hybrid;
    if (s == "kg") return Strategy::keller_gehrig;
    if (s == "naive") return Strategy::naive;
    if (s == "polmat") return Strategy::polmat_only;
    throw CLI::ValidationError("--algo", "unknown algorithm '" + s + "'");
}

DegreeTuple indices_for(const KrylovSpec& spec, Strategy strat) {
    switch (strat) {
        case Strategy::naive:
            return naive_max_indices(spec);
        case Strategy::polmat_only:
            return max_indices(spec);
        case Strategy::keller_gehrig:
            return keller_gehrig_basis(spec).indices;
        case Strategy::hybrid:
            return max_krylov_basis(spec).indices;
    }
    return {};
}

void write_basis(std::ostream& out, const KrylovBasisResult& res) {
    write_matrix(out, res.basis);
    out << "indices " << res.indices.to_string() << '\n';
    out << "labels";
    for (auto [j, k] : res.column_labels) out << ' ' << j << ':' << k;
    out << '\n';
}

struct SelftestReport {
    std::size_t instances = 0;
    std::size_t failures = 0;
};

// Cross-strategy equivalence on seeded random instances: index tuples,
// Krylov matrices for random orders, and maximal bases must agree between
// the elimination oracle, the branching loop, and the polynomial path.
SelftestReport run_selftest(std::ostream& out, std::uint64_t prime, std::uint64_t seed, std::size_t max_n) {
    PrimeModulus mod(prime);
    CounterRng rng(seed);
    SelftestReport rep;
    auto fail = [&](const std::string& what, std::size_t n, std::size_t m) {
        ++rep.failures;
        out << "selftest mismatch: " << what << " (n=" << n << ", m=" << m << ")\n";
    };
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t m : {std::size_t{0}, std::size_t{1}, n / 2, n, n + 2}) {
            if (m > n + 2) continue;
            ++rep.instances;
            DenseMatrix A = random_matrix(n, n, mod, rng);
            DenseMatrix U = random_matrix(n, m, mod, rng);
            KrylovSpec spec(A, U);

            DegreeTuple d_ref = naive_max_indices(spec);
            if (max_indices(spec) != d_ref) fail("max_indices vs elimination", n, m);

            DegreeTuple d;
            for (std::size_t j = 0; j < m; ++j) d.values.push_back(static_cast<std::int64_t>(rng.next_u64() % (n + 1)));
            DenseMatrix K_ref = naive_krylov_matrix(spec, d);
            if (krylov_matrix(spec, d) != K_ref) fail("krylov_matrix vs iteration", n, m);
            if (krylov_matrix_hybrid(spec, d) != K_ref) fail("krylov_matrix_hybrid vs iteration", n, m);

            KrylovBasisResult kg = keller_gehrig_basis(spec);
            if (max_krylov_basis(spec) != kg) fail("max_krylov_basis vs branching", n, m);
            AlgoConfig pol;
            pol.strategy = Strategy::polmat_only;
            if (max_krylov_basis(spec, pol) != kg) fail("polynomial basis vs branching", n, m);
        }
    }
    return rep;
}

std::uint64_t checked_prime(std::uint64_t p) {
    if (!is_prime_u64(p) || p >= PrimeModulus::max_modulus)
        throw CLI::ValidationError("--prime", "not a supported prime");
    return p;
}

void run_bench(std::ostream& out, std::uint64_t prime, std::uint64_t seed,
               const std::vector<std::size_t>& sizes, const std::vector<std::string>& algos) {
    PrimeModulus mod(prime);
    out << "algo,n,m,seed,wall_time_ns,field_op_estimate\n";
    for (std::size_t n : sizes) {
        std::size_t m = std::max<std::size_t>(1, n / 8);
        CounterRng rng(seed);
        DenseMatrix A = random_matrix(n, n, mod, rng);
        DenseMatrix U = random_matrix(n, m, mod, rng);
        KrylovSpec spec(A, U);
        for (const std::string& name : algos) {
            AlgoConfig cfg;
            cfg.strategy = parse_strategy(name);
            reset_field_op_count();
            auto t0 = std::chrono::steady_clock::now();
            KrylovBasisResult res = max_krylov_basis(spec, cfg);
            auto t1 = std::chrono::steady_clock::now();
            std::uint64_t ops = field_op_count();
            out << name << ',' << n << ',' << m << ',' << seed << ','
                << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() << ',' << ops
                << '\n';
            (void)res;
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Krylov bases, polynomial-matrix style, over prime fields"};
    app.name("krylovium");
    app.require_subcommand(1);

    if (const char* threads = std::getenv("KRYLOVIUM_THREADS")) {
        // Reserved; only single-threaded execution is implemented.
        char* end = nullptr;
        long v = std::strtol(threads, &end, 10);
        if (end == threads || v < 1) {
            err << "KRYLOVIUM_THREADS must be a positive integer\n";
            return 1;
        }
    }

    std::string matrix_path, vectors_path, orders_path, vector_path;
    std::string algo;
    double omega = 3.0, c1 = 2.0;
    std::string k_str;
    std::uint64_t prime = 97, seed = 1;
    std::size_t max_n = 10;
    std::string sizes_str, algos_str = "hybrid,kg,naive,polmat";

    auto* cmd_indices = app.add_subcommand("indices", "print the maximal Krylov indices of (A, U)");
    cmd_indices->add_option("--matrix", matrix_path)->required();
    cmd_indices->add_option("--vectors", vectors_path)->required();
    cmd_indices->add_option("--algo", algo)->default_val("polmat");

    auto* cmd_krylov = app.add_subcommand("krylov", "write the Krylov matrix for given orders");
    cmd_krylov->add_option("--matrix", matrix_path)->required();
    cmd_krylov->add_option("--vectors", vectors_path)->required();
    cmd_krylov->add_option("--orders", orders_path)->required();
    cmd_krylov->add_option("--algo", algo)->default_val("polmat");

    auto* cmd_basis = app.add_subcommand("basis", "write the maximal Krylov basis, indices and labels");
    cmd_basis->add_option("--matrix", matrix_path)->required();
    cmd_basis->add_option("--vectors", vectors_path)->required();
    cmd_basis->add_option("--algo", algo)->default_val("hybrid");
    cmd_basis->add_option("--omega", omega);
    cmd_basis->add_option("--c1", c1);

    auto* cmd_minpoly = app.add_subcommand("minpoly", "minimal polynomial of A (or of a vector under A)");
    cmd_minpoly->add_option("--matrix", matrix_path)->required();
    cmd_minpoly->add_option("--vector", vector_path);

    auto* cmd_invfactors = app.add_subcommand("invfactors", "invariant factors and companion block form");
    cmd_invfactors->add_option("--matrix", matrix_path)->required();

    auto* cmd_power = app.add_subcommand("power", "write A^k");
    cmd_power->add_option("--matrix", matrix_path)->required();
    cmd_power->add_option("--k", k_str)->required();

    auto* cmd_kalman = app.add_subcommand("kalman", "controllability splitting of (A, U)");
    cmd_kalman->add_option("--matrix", matrix_path)->required();
    cmd_kalman->add_option("--vectors", vectors_path)->required();

    auto* cmd_selftest = app.add_subcommand("selftest", "cross-strategy equivalence on random instances");
    cmd_selftest->add_option("--prime", prime);
    cmd_selftest->add_option("--seed", seed);
    cmd_selftest->add_option("--max-n", max_n);

    auto* cmd_bench = app.add_subcommand("bench", "CSV timing comparison of the basis strategies");
    cmd_bench->add_option("--prime", prime);
    cmd_bench->add_option("--seed", seed);
    cmd_bench->add_option("--sizes", sizes_str)->required();
    cmd_bench->add_option("--algos", algos_str);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*cmd_indices) {
            KrylovSpec spec(read_matrix_file(matrix_path), read_matrix_file(vectors_path));
            out << indices_for(spec, parse_strategy(algo)).to_string() << '\n';
        } else if (*cmd_krylov) {
            KrylovSpec spec(read_matrix_file(matrix_path), read_matrix_file(vectors_path));
            DegreeTuple d = read_tuple_file(orders_path);
            d.require_orders(spec.m());
            Strategy strat = parse_strategy(algo);
            DenseMatrix K = strat == Strategy::naive      ? naive_krylov_matrix(spec, d)
                            : strat == Strategy::hybrid   ? krylov_matrix_hybrid(spec, d)
                                                          : krylov_matrix(spec, d);
            write_matrix(out, K);
        } else if (*cmd_basis) {
            KrylovSpec spec(read_matrix_file(matrix_path), read_matrix_file(vectors_path));
            AlgoConfig cfg;
            cfg.omega = omega;
            cfg.c1 = c1;
            cfg.strategy = parse_strategy(algo);
            write_basis(out, max_krylov_basis(spec, cfg));
        } else if (*cmd_minpoly) {
            DenseMatrix A = read_matrix_file(matrix_path);
            Poly f = vector_path.empty() ? matrix_minpoly(A)
                                         : vector_minpoly(A, read_matrix_file(vector_path));
            out << poly_to_line(f) << '\n';
        } else if (*cmd_invfactors) {
            FrobeniusData fd = invariant_factors(read_matrix_file(matrix_path));
            for (const Poly& f : fd.invariant_factors) out << poly_to_line(f) << '\n';
            out << '\n';
            write_matrix(out, fd.block_form);
        } else if (*cmd_power) {
            DenseMatrix A = read_matrix_file(matrix_path);
            write_matrix(out, matrix_power(A, BigNat::from_decimal(k_str)));
        } else if (*cmd_kalman) {
            KrylovSpec spec(read_matrix_file(matrix_path), read_matrix_file(vectors_path));
            KalmanData kd = kalman_decomposition(spec);
            out << "nu " << kd.nu << '\n';
            write_matrix(out, kd.P);
        } else if (*cmd_selftest) {
            checked_prime(prime);
            SelftestReport rep = run_selftest(out, prime, seed, max_n);
            out << "selftest: " << rep.instances << " instances, " << rep.failures << " mismatches\n";
            return rep.failures == 0 ? 0 : 1;
        } else if (*cmd_bench) {
            checked_prime(prime);
            std::vector<std::size_t> sizes;
            std::stringstream ss(sizes_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(static_cast<std::size_t>(std::stoull(tok)));
            std::vector<std::string> algos;
            std::stringstream sa(algos_str);
            while (std::getline(sa, tok, ',')) algos.push_back(tok);
            run_bench(out, prime, seed, sizes, algos);
        }
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace krylovium
