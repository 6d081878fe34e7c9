#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "paraclass/report.hpp"

using namespace paraclass;

namespace {

int cmd_scan(long max_d, long jobs, const std::string& out) {
    ResultCache cache(ResultCache::default_path());
    ScanReport rep = run_scan(max_d, jobs);
    for (const auto& row : rep.rows)
        if (row.ok && !cache.lookup("quad", row.d.get_str()))
            cache.store("quad", row.d.get_str(), row.to_json());
    std::string payload = rep.to_json();
    if (!out.empty()) {
        std::ofstream f(out, std::ios::trunc);
        f << payload << "\n";
        std::cout << "scan of d <= " << max_d << " written to " << out << "\n";
    } else {
        std::cout << payload << "\n";
    }
    return 0;
}

int cmd_quad(const std::string& d_str, bool as_json) {
    Int d(d_str);
    ScanRow row = scan_one(d);
    if (as_json) {
        std::cout << row.to_json() << "\n";
        return row.ok ? 0 : 1;
    }
    if (!row.ok) {
        std::cout << "d = " << d << ": " << row.error << "\n";
        return 1;
    }
    std::cout << "d = " << d << "\n";
    std::cout << "  fundamental unit: " << row.eps.to_string() << "\n";
    std::cout << "  laurent: " << (row.laurent ? "yes" : "no") << " (index of Z[eps]: "
              << row.index << ")\n";
    if (row.class_group)
        std::cout << "  class group: " << row.class_group->to_string() << "\n";
    if (row.s_class_group)
        std::cout << "  S-class group: " << row.s_class_group->to_string() << " ("
                  << (row.comparison && *row.comparison == SComparison::isomorphic
                          ? "maps isomorphically onto the class group"
                          : "proper subgroup of the class group")
                  << ")\n";
    if (row.residually_nilpotent)
        std::cout << "  residually nilpotent: " << (row.residually_nilpotent->value ? "yes" : "no")
                  << " (" << row.residually_nilpotent->certificate << ")\n";
    if (row.para_class_count >= 0)
        std::cout << "  para-equivalent isomorphism classes: " << row.para_class_count << "\n";
    return 0;
}

int cmd_cyclo(long n) {
    CycloReport rep = cyclo_res_nilpotent(n);
    std::cout << "n = " << n << ": Phi_n(1) = " << rep.phi_at_one << ", residually nilpotent: "
              << (rep.residually_nilpotent ? "yes" : "no") << " (prime power: "
              << (rep.is_prime_power ? "yes" : "no") << ")\n";
    if (rep.pid_known)
        std::cout << "  classification: " << (*rep.pid_known ? "1 class (principal ideal domain)"
                                                             : "non-principal ideals exist")
                  << "\n";
    for (const auto& note : rep.notes) std::cout << "  " << note << "\n";
    if (n == 23) {
        Cyclo23Witness w = cyclo23_witness();
        std::cout << "  subfield witness: " << (w.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& note : w.notes) std::cout << "    " << note << "\n";
    }
    return 0;
}

int cmd_group(const std::string& preset, const std::string& op, long depth) {
    SplitMetabelianGroup g = make_group(preset);
    if (op == "lcs") {
        for (long n = 1; n <= depth; n++)
            std::cout << "gamma_" << n << "/gamma_" << n + 1 << " = "
                      << lcs_quotient(g, n).to_string() << "\n";
        return 0;
    }
    if (op == "hilbert") {
        HilbertResult h = hilbert_coeffs(g, depth);
        std::cout << "ranks:";
        for (long r : h.ranks) std::cout << " " << r;
        std::cout << "\nseries: " << h.series << "\n";
        return 0;
    }
    if (op == "fp") {
        BoolWithReason r = is_finitely_presentable(g);
        std::cout << preset << " finitely presentable: " << (r.value ? "yes" : "no") << " ("
                  << r.reason << ")\n";
        return 0;
    }
    if (op == "rn") {
        BoolWithReason r = is_residually_nilpotent(g);
        std::cout << preset << " residually nilpotent: " << (r.value ? "yes" : "no") << " ("
                  << r.reason << ")\n";
        return 0;
    }
    if (op == "classify") {
        ClassificationReport rep = classify_para(g);
        std::cout << report_to_json(rep) << "\n";
        return 0;
    }
    std::cerr << "unknown op: " << op << "\n";
    return 2;
}

int cmd_verify(const std::string& name) {
    VerifyResult v = verify_example(name);
    for (const auto& line : v.transcript) std::cout << line << "\n";
    std::cout << v.name << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
    return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"para-equivalence classification of split metabelian groups"};
    app.require_subcommand(1);

    auto* scan = app.add_subcommand("scan", "scan squarefree d up to a bound");
    long max_d = 100, jobs = 1;
    std::string out;
    scan->add_option("--max-d", max_d, "largest d")->required();
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--out", out, "write the JSON report to a file");

    auto* quad = app.add_subcommand("quad", "one real quadratic field");
    std::string d_str;
    bool as_json = false;
    quad->add_option("--d", d_str, "squarefree d >= 2")->required();
    quad->add_flag("--json", as_json, "JSON output");

    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic residual nilpotence");
    long n = 0;
    cyclo->add_option("--n", n, "index n >= 2")->required();

    auto* group = app.add_subcommand("group", "operations on a preset group");
    std::string preset, op;
    long depth = 6;
    group->add_option("--preset", preset, "preset name")->required();
    group->add_option("--op", op, "lcs | hilbert | fp | rn | classify")->required();
    group->add_option("--depth", depth, "depth for lcs and hilbert");

    auto* verify = app.add_subcommand("verify", "replay a named example");
    std::string example;
    verify->add_option("--example", example, "d10 | wreath_ideal | zc2 | cyclo23 | telescope | embedding")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*scan) return cmd_scan(max_d, jobs, out);
        if (*quad) return cmd_quad(d_str, as_json);
        if (*cyclo) return cmd_cyclo(n);
        if (*group) return cmd_group(preset, op, depth);
        if (*verify) return cmd_verify(example);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
