#include "dsh/cli_io.hpp"
#include "dsh/crossed_product.hpp"
#include "dsh/errors.hpp"
#include "dsh/graded_solver.hpp"
#include "dsh/lie_side.hpp"
#include "dsh/mlv.hpp"
#include "dsh/racinet_group.hpp"
#include "dsh/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace dsh;

namespace {

constexpr int kMember = 0;
constexpr int kNonMember = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot write '" + path.string() + "'");
    out << text;
}

std::vector<GroupSpec> parse_groups(const std::vector<std::string>& names)
{
    std::vector<GroupSpec> out;
    for (auto& n : names)
        out.push_back(GroupSpec::parse(n));
    return out;
}

Verdict run_membership(const std::string& which, const XSeries& psi)
{
    if (which == "dmr0")
        return dmr0_membership(psi);
    if (which == "stab-mod")
        return stab_mod_membership(psi);
    if (which == "stab-w")
        return stab_W_membership(psi);
    if (which == "stab-m")
        return stab_M_membership(psi);
    if (which == "stab-alg")
        return stab_alg_membership(psi);
    if (which == "dmr0-lie")
        return dmr0_lie_membership(psi);
    if (which == "stab-mod-lie")
        return stab_mod_lie_membership(psi);
    if (which == "stab-w-lie")
        return stab_W_lie_membership(psi);
    if (which == "stab-m-lie")
        return stab_M_lie_membership(psi);
    if (which == "stab-alg-lie")
        return stab_alg_lie_membership(psi);
    throw UnsupportedError("unknown --which '" + which + "'");
}

struct CheckArgs {
    std::string which;
    std::string input;
    int cap = -1;
    std::string group;
};

int cmd_check(const CheckArgs& a)
{
    AnySeries doc = parse_series(read_file(a.input));
    if (!std::holds_alternative<XSeries>(doc))
        throw DomainError("check needs an X document");
    XSeries psi = std::get<XSeries>(doc);
    if (!a.group.empty() && GroupSpec::parse(a.group) != psi.group().spec())
        throw DomainError("document group " + psi.group().spec().to_string() + " differs from --group " + a.group);
    if (a.cap >= 0) {
        if (a.cap > psi.cap())
            throw DomainError("--cap " + std::to_string(a.cap) + " exceeds the document cap "
                              + std::to_string(psi.cap()));
        psi = psi.with_cap(a.cap);
    }
    Verdict v = run_membership(a.which, psi);
    std::cout << "which " << a.which << '\n'
              << "group " << psi.group().spec().to_string() << '\n'
              << "cap " << psi.cap() << '\n';
    for (auto& c : v.conditions) {
        std::cout << "condition " << c.name << ' ' << (c.pass ? "pass" : "fail");
        if (!c.pass)
            std::cout << " witness " << c.witness;
        std::cout << '\n';
    }
    std::cout << "verdict " << (v.member ? "member" : "non-member") << '\n';
    return v.member ? kMember : kNonMember;
}

struct DimsArgs {
    std::vector<std::string> groups;
    int max_degree = 4;
    std::string which = "all";
    std::string emit_witness;
    int workers = 0;
};

int cmd_dims(const DimsArgs& a)
{
    std::vector<GroupSpec> groups = parse_groups(a.groups);
    std::vector<Condition> families;
    if (a.which == "all") {
        families = {Condition::Dmr0, Condition::StabMod, Condition::StabAlg};
    } else {
        families = {parse_condition(a.which)};
        if (families[0] == Condition::Dmr0)
            for (auto& g : groups)
                if (!g.is_cyclic())
                    throw UnsupportedError("dmr0 needs a cyclic group, got " + g.to_string());
    }
    auto table = dimension_table(groups, a.max_degree, a.workers);
    std::cout << format_dimension_table(table);

    bool ok = true;
    for (auto& row : table) {
        ok = ok && row.inclusions.member;
        if (!row.inclusions.member)
            std::cout << "# " << row.group.to_string() << " degree " << row.degree << ": "
                      << row.inclusions.first_failure() << '\n';
    }
    if (!a.emit_witness.empty()) {
        std::filesystem::path dir(a.emit_witness);
        std::filesystem::create_directories(dir);
        for (auto& row : table)
            for (Condition which : families) {
                auto it = row.reports.find(which);
                if (it == row.reports.end())
                    continue;
                const GradedKernelReport& r = it->second;
                std::string stem = row.group.to_string() + "-" + condition_name(which) + "-n" + std::to_string(row.degree);
                write_file(dir / (stem + ".kernel"), format_kernel_report(r));
                for (size_t i = 0; i < r.elements.size(); ++i)
                    write_file(dir / (stem + "-" + std::to_string(i + 1) + ".dsh"), emit_series(r.elements[i]));
            }
    }
    return ok ? 0 : 1;
}

struct VerifyArgs {
    std::string suite = "all";
    int cap = 4;
    std::vector<std::string> groups{"trivial"};
    std::uint64_t seed = 1;
    int trials = 20;
};

int cmd_verify(const VerifyArgs& a)
{
    std::vector<const SuiteInfo*> suites;
    if (a.suite == "all") {
        for (auto& s : verify_suites())
            if (!s.negative_control)
                suites.push_back(&s);
    } else {
        suites.push_back(&find_suite(a.suite));
    }
    bool ok = true;
    for (auto& spec : parse_groups(a.groups))
        for (auto* s : suites) {
            SuiteResult r = run_suite(*s, SuiteOptions{spec, a.cap, a.seed, a.trials});
            std::cout << format_suite_result(r);
            ok = ok && r.pass();
        }
    std::cout << "overall " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

struct MlvArgs {
    std::vector<int> k;
    std::vector<int> a;
    int N = 1;
    std::int64_t M = 1000000;
    std::string word;
    std::string group = "trivial";
};

int cmd_mlv(const MlvArgs& args)
{
    MLVEstimate e;
    if (!args.word.empty()) {
        if (!args.k.empty())
            throw DomainError("give either --word or --k, not both");
        GroupPtr g = make_group(GroupSpec::parse(args.group));
        Word w = parse_word(*g, args.word, Alphabet::Y);
        e = mlv_eval_series(YSeries::monomial(g, degree(w), w), args.M);
    } else {
        MLVQuery q{args.k, args.a.empty() ? std::vector<int>(args.k.size(), 0) : args.a, args.N, args.M};
        e = mlv_eval(q);
    }
    std::cout << std::setprecision(15) << "value " << static_cast<double>(e.value.real()) << ' '
              << static_cast<double>(e.value.imag()) << '\n'
              << "partial_sum " << static_cast<double>(e.partial_sum.real()) << ' '
              << static_cast<double>(e.partial_sum.imag()) << '\n'
              << "error_bound " << static_cast<double>(e.error_bound) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with Racinet-type groups, crossed products and their stabilizers"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "membership test for a series document");
    c->add_option("--which", check.which,
                  "dmr0|stab-mod|stab-w|stab-m|stab-alg, or the same with -lie for Lie elements")
        ->required();
    c->add_option("--input", check.input, "series document (alphabet X)")->required();
    c->add_option("--cap", check.cap, "truncate to this cap before checking");
    c->add_option("--group", check.group, "expected group of the document");

    DimsArgs dims;
    auto* d = app.add_subcommand("dims", "graded kernel dimensions and inclusion checks");
    d->add_option("--group", dims.groups, "group spec, repeatable")->required();
    d->add_option("--max-degree", dims.max_degree, "largest degree")->check(CLI::Range(1, 12));
    d->add_option("--which", dims.which, "dmr0|stab-mod|stab-alg|all (families for --emit-witness)");
    d->add_option("--emit-witness", dims.emit_witness, "directory for kernel reports and kernel vectors");
    d->add_option("--workers", dims.workers, "worker threads (default: DSH_WORKERS or hardware)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "randomized identity suites");
    v->add_option("--suite", verify.suite, "suite name or all");
    v->add_option("--cap", verify.cap, "truncation degree")->check(CLI::Range(1, 8));
    v->add_option("--group", verify.groups, "group spec, repeatable");
    v->add_option("--seed", verify.seed, "random seed");
    v->add_option("--trials", verify.trials, "trials per identity")->check(CLI::PositiveNumber);
    bool list_suites = false;
    v->add_flag("--list", list_suites, "list the suites and exit");

    MlvArgs mlv;
    auto* m = app.add_subcommand("mlv", "numeric multiple L-value");
    m->add_option("--k", mlv.k, "exponents k_1..k_r")->delimiter(',');
    m->add_option("--a", mlv.a, "root residues a_1..a_r (z_j = exp(2 pi i a_j / N))")->delimiter(',');
    m->add_option("--N", mlv.N, "root order");
    m->add_option("--M", mlv.M, "summation bound");
    m->add_option("--word", mlv.word, "a Y-word such as 'y2 y1[1]', evaluated via the letter reversal");
    m->add_option("--group", mlv.group, "group for --word");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (*c)
            return cmd_check(check);
        if (*d)
            return cmd_dims(dims);
        if (*v) {
            if (list_suites) {
                for (auto& s : verify_suites())
                    std::cout << s.name << (s.negative_control ? " (negative control)" : "") << ": " << s.summary
                              << '\n';
                return 0;
            }
            return cmd_verify(verify);
        }
        if (*m) {
            if (mlv.k.empty() && mlv.word.empty())
                throw DomainError("mlv needs --k or --word");
            return cmd_mlv(mlv);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
