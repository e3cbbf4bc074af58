// cantorpot — exact potential-theory calculator on the space of infinite
// sequences over a finite alphabet. All arithmetic is rational; identical
// inputs produce byte-identical outputs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantor/capacity.hpp"
#include "cantor/enumeration.hpp"
#include "cantor/kernel.hpp"
#include "cantor/measure.hpp"
#include "cantor/prefix_free.hpp"
#include "cantor/verify.hpp"

namespace {

using namespace cantor;

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadInput = 2;

// Oracle instance cap: word depth d and cylinder count b^d are both limited
// by this depth (b^d <= 2^depth).
long oracle_max_depth() {
    const char* env = std::getenv("CANTOR_POTENTIAL_MAX_DEPTH");
    if (!env || !*env) return 6;
    std::string text(env);
    std::size_t used = 0;
    long depth = 0;
    try {
        depth = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || depth < 0)
        throw ParseError("CANTOR_POTENTIAL_MAX_DEPTH must be a nonnegative integer, got '" +
                         text + "'");
    return depth;
}

int run_capacity(const std::string& kernel_path, const std::string& set_path, long shift,
                 bool with_oracle) {
    Kernel kernel = Kernel::load_file(kernel_path);
    PrefixFreeSet set = PrefixFreeSet::load_file(set_path, kernel.alphabet());
    Rational value = capacity(kernel, set, shift);
    std::cout << rational_str(value) << "\n";
    if (with_oracle) {
        if (set.is_empty()) {
            std::cerr << "oracle: empty set, nothing to solve; capacity is 0 by definition\n";
            return 0;
        }
        Kernel shifted = shift == 0 ? kernel : Kernel::shift(kernel, shift);
        Rational oracle = capacity_lp_oracle(shifted, set, oracle_max_depth());
        if (oracle != value) {
            std::cerr << "oracle mismatch: recursion " << rational_str(value)
                      << ", linear program " << rational_str(oracle) << "\n";
            return kExitFailedCheck;
        }
        std::cerr << "oracle agrees: " << rational_str(oracle) << "\n";
    }
    return 0;
}

int run_realize(const std::string& kernel_path, const std::string& set_path, long shift,
                const std::string& out_path) {
    Kernel kernel = Kernel::load_file(kernel_path);
    PrefixFreeSet set = PrefixFreeSet::load_file(set_path, kernel.alphabet());
    Rational value = capacity(kernel, set, shift);
    TrieMeasure mu = realizing_measure(kernel, set, shift);

    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write measure file '" + out_path + "'");
    out << mu.to_json().dump(2) << "\n";

    bool ok = true;
    const ExtValue one{Rational(1)};

    bool mass_ok = mu.total_mass() == value;
    std::cout << "mass " << rational_str(mu.total_mass()) << " equals capacity "
              << rational_str(value) << ": " << (mass_ok ? "ok" : "FAIL") << "\n";
    ok = ok && mass_ok;

    bool on_ok = true;
    for (const auto& w : set.words())
        on_ok = on_ok &&
                potential(kernel, mu, EventuallyPeriodicSequence::cylinder_point(w), shift) == one;
    std::cout << "potential exactly 1 on all " << set.words().size()
              << " set cylinders: " << (on_ok ? "ok" : "FAIL") << "\n";
    ok = ok && on_ok;

    std::vector<Word> off = set.complement_antichain();
    bool off_ok = true;
    for (const auto& w : off)
        off_ok = off_ok &&
                 potential(kernel, mu, EventuallyPeriodicSequence::cylinder_point(w), shift) <= one;
    std::cout << "potential <= 1 on all " << off.size()
              << " complementary cylinders: " << (off_ok ? "ok" : "FAIL") << "\n";
    ok = ok && off_ok;

    return ok ? 0 : kExitFailedCheck;
}

int run_energy(const std::string& kernel_path, const std::string& measure_path) {
    Kernel kernel = Kernel::load_file(kernel_path);
    TrieMeasure mu = TrieMeasure::load_file(measure_path, kernel.alphabet());
    std::cout << energy(kernel, mu).str() << "\n";
    return 0;
}

int run_potential(const std::string& kernel_path, const std::string& measure_path,
                  const std::string& point, long shift) {
    Kernel kernel = Kernel::load_file(kernel_path);
    TrieMeasure mu = TrieMeasure::load_file(measure_path, kernel.alphabet());
    EventuallyPeriodicSequence x = EventuallyPeriodicSequence::parse(point, kernel.alphabet());
    std::cout << potential(kernel, mu, x, shift).str() << "\n";
    return 0;
}

int run_mutual(const std::string& kernel_path, const std::string& measure_path,
               const std::string& other_path) {
    Kernel kernel = Kernel::load_file(kernel_path);
    TrieMeasure mu = TrieMeasure::load_file(measure_path, kernel.alphabet());
    TrieMeasure nu = TrieMeasure::load_file(other_path, kernel.alphabet());
    std::cout << mutual_energy(kernel, mu, nu).str() << "\n";
    return 0;
}

int run_riesz_energy(const std::string& ratio_text, const std::string& measure_path) {
    Rational r = parse_rational(ratio_text);
    TrieMeasure mu = TrieMeasure::load_file(measure_path, Alphabet(2));
    std::cout << riesz_energy(mu, r).str() << "\n";
    return 0;
}

int run_enumerate(const std::string& kernel_path, const std::string& order_path,
                  const std::string& trace_path, long shift, bool check) {
    Kernel kernel = Kernel::load_file(kernel_path);
    GoodEnumeration enumeration = GoodEnumeration::load_file(order_path, kernel.alphabet());
    DynamicWeightTrace trace = dynamic_weight(kernel, enumeration, shift);

    std::ofstream out(trace_path);
    if (!out) throw ParseError("cannot write trace file '" + trace_path + "'");
    write_trace_csv(out, kernel, enumeration, trace, shift);

    std::cout << "final ww " << rational_str(trace.final_ww) << "\n";
    if (!check) return 0;

    SandwichReport sandwich = check_sandwich(kernel, enumeration, shift);
    std::cout << "sandwich " << rational_str(sandwich.capacity_value) << " <= "
              << rational_str(sandwich.ww) << " <= " << rational_str(sandwich.bound_constant)
              << " * " << rational_str(sandwich.capacity_value) << ": "
              << (sandwich.pass() ? "PASS" : "FAIL") << "\n";

    TrieMeasure staged = staged_measure(kernel, enumeration, shift);
    bool potential_ok = true;
    const ExtValue one{Rational(1)};
    PrefixFreeSet covered = enumeration.set();
    for (const auto& w : covered.words())
        potential_ok =
            potential_ok &&
            potential(kernel, staged, EventuallyPeriodicSequence::cylinder_point(w), shift) >= one;
    std::cout << "staged potential >= 1 on every enumerated cylinder: "
              << (potential_ok ? "PASS" : "FAIL") << "\n";

    return sandwich.pass() && potential_ok ? 0 : kExitFailedCheck;
}

int run_cftest(const std::string& kernel_path, const std::string& levels_dir) {
    Kernel kernel = Kernel::load_file(kernel_path);
    // Level n of the test is the file <levels_dir>/<n>.txt, consecutively
    // numbered from 0.
    std::vector<PrefixFreeSet> levels;
    for (std::size_t n = 0;; ++n) {
        std::string path = levels_dir + "/" + std::to_string(n) + ".txt";
        std::ifstream probe(path);
        if (!probe) break;
        probe.close();
        levels.push_back(PrefixFreeSet::load_file(path, kernel.alphabet()));
    }
    if (levels.empty())
        throw ParseError("no level files found; expected '" + levels_dir +
                         "/0.txt', '/1.txt', ... numbered consecutively");
    CfTestReport report = cf_test_check(kernel, levels);
    for (const auto& level : report.levels)
        std::cout << "level " << level.index << ": capacity "
                  << rational_str(level.capacity_value)
                  << (level.pass ? " <= " : " > ") << rational_str(level.bound) << ": "
                  << (level.pass ? "pass" : "fail") << "\n";
    std::cout << "overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? 0 : kExitFailedCheck;
}

int run_verify(const std::string& suite) {
    std::vector<verify::CheckResult> results = verify::run_suite(suite);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all " : "FAILED: some of ") << results.size()
              << " properties verified\n";
    return all ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact capacities, energies and potentials on infinite-sequence space"};
    app.require_subcommand(1);

    std::string kernel_path, set_path, measure_path, other_path, order_path;
    std::string out_path, trace_path, point, ratio, suite = "all";
    long shift = 0;
    bool with_oracle = false, check = false;

    CLI::App* cap = app.add_subcommand("capacity", "Capacity of the clopen set [S]");
    cap->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    cap->add_option("--set", set_path, "prefix-free word set, one word per line")->required();
    cap->add_option("--shift", shift, "shift the kernel by this offset")->check(CLI::NonNegativeNumber);
    cap->add_flag("--oracle", with_oracle, "cross-check against the exact linear program");

    CLI::App* real = app.add_subcommand("realize", "Write the capacity-realizing measure");
    real->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    real->add_option("--set", set_path, "prefix-free word set")->required();
    real->add_option("--shift", shift, "shift the kernel by this offset")->check(CLI::NonNegativeNumber);
    real->add_option("--out", out_path, "output measure JSON file")->required();

    CLI::App* en = app.add_subcommand("energy", "Energy of a measure under a kernel");
    en->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    en->add_option("--measure", measure_path, "measure JSON file")->required();

    CLI::App* pot = app.add_subcommand("potential", "Potential of a measure at a point");
    pot->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    pot->add_option("--measure", measure_path, "measure JSON file")->required();
    pot->add_option("--point", point, "eventually periodic point, HEAD:PERIOD")->required();
    pot->add_option("--shift", shift, "shift the kernel by this offset")->check(CLI::NonNegativeNumber);

    CLI::App* mut = app.add_subcommand("mutual", "Mutual energy of two measures");
    mut->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    mut->add_option("--measure", measure_path, "first measure JSON file")->required();
    mut->add_option("--measure2", other_path, "second measure JSON file")->required();

    CLI::App* riesz = app.add_subcommand("riesz-energy",
                                         "Distance-based energy of a binary-alphabet measure");
    riesz->add_option("--ratio", ratio, "exponent ratio in (1,2), e.g. 3/2")->required();
    riesz->add_option("--measure", measure_path, "measure JSON file")->required();

    CLI::App* enu = app.add_subcommand("enumerate", "Replay the online weight of an enumeration");
    enu->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    enu->add_option("--order", order_path, "one word per stage, in discovery order")->required();
    enu->add_option("--trace", trace_path, "output CSV trace file")->required();
    enu->add_option("--shift", shift, "shift the kernel by this offset")->check(CLI::NonNegativeNumber);
    enu->add_flag("--check", check, "verify the capacity sandwich and the potential bound");

    CLI::App* cft = app.add_subcommand("cftest", "Check capacity bounds 2^-n over level files");
    cft->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    cft->add_option("--levels", set_path, "directory of level files 0.txt, 1.txt, ...")
        ->required();

    CLI::App* ver = app.add_subcommand("verify", "Run the invariant suites");
    ver->add_option("--suite", suite, "measure, capacity, enumeration or all")
        ->check(CLI::IsMember(cantor::verify::suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (app.got_subcommand(cap)) return run_capacity(kernel_path, set_path, shift, with_oracle);
        if (app.got_subcommand(real)) return run_realize(kernel_path, set_path, shift, out_path);
        if (app.got_subcommand(en)) return run_energy(kernel_path, measure_path);
        if (app.got_subcommand(pot)) return run_potential(kernel_path, measure_path, point, shift);
        if (app.got_subcommand(mut)) return run_mutual(kernel_path, measure_path, other_path);
        if (app.got_subcommand(riesz)) return run_riesz_energy(ratio, measure_path);
        if (app.got_subcommand(enu))
            return run_enumerate(kernel_path, order_path, trace_path, shift, check);
        if (app.got_subcommand(cft)) return run_cftest(kernel_path, set_path);
        if (app.got_subcommand(ver)) return run_verify(suite);
    } catch (const cantor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
