#include "dsh/graded_solver.hpp"

#include "dsh/format.hpp"
#include "dsh/lie_side.hpp"
#include "dsh/lyndon.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace dsh {

std::string condition_name(Condition which)
{
    switch (which) {
    case Condition::Dmr0:
        return "dmr0";
    case Condition::StabMod:
        return "stab_mod";
    case Condition::StabAlg:
        return "stab_alg";
    }
    throw InternalError("condition_name: unknown condition");
}

Condition parse_condition(const std::string& name)
{
    if (name == "dmr0")
        return Condition::Dmr0;
    if (name == "stab_mod" || name == "stab-mod")
        return Condition::StabMod;
    if (name == "stab_alg" || name == "stab-alg")
        return Condition::StabAlg;
    throw UnsupportedError("unknown condition family '" + name + "'");
}

namespace {

template <class Tag>
void add_tensor(std::map<std::string, Rational>& out, const std::string& prefix, const Tensor<Tag>& t)
{
    for (auto& [k, c] : t.terms())
        out[prefix + k] += c;
}

template <class Op>
void add_commutation(std::map<std::string, Rational>& out, HarmonicCoproduct<YTag>& delta,
                     const std::vector<Word>& words, Op& op)
{
    for (auto& w : words) {
        YTensor lhs = tensor_derivation_map(delta.of_word(w), [&](const Word& u) -> const YSeries& { return op(u); });
        YTensor diff = lhs - delta(op(w));
        add_tensor(out, w + '|', diff);
    }
}

std::map<std::string, Rational> image_with(Condition which, const XSeries& psi, HarmonicCoproduct<YTag>& delta)
{
    const Group& group = psi.group();
    const int cap = psi.cap();
    std::map<std::string, Rational> out;
    switch (which) {
    case Condition::Dmr0: {
        if (!group.spec().is_cyclic())
            throw UnsupportedError("dmr0 conditions need a cyclic group, got " + group.spec().to_string());
        out["i|x0"] = psi.coeff(Word(1, kX0));
        out["i|x1"] = psi.coeff(x1_word());
        YSeries star = psi_star_lie(psi);
        add_tensor(out, "ii|", delta_star_mod(star) - unit_tensor(star, true) - unit_tensor(star, false));
        std::vector<std::pair<int, int>> cases;
        if (group.size() <= 2)
            cases.push_back({2, 0});
        else if (group.size() >= 3)
            for (int g = 0; g < group.size(); ++g)
                cases.push_back({1, g});
        for (auto [n, g] : cases) {
            if (n > cap)
                continue;
            Rational b = star.coeff(y_letter_word(n, group.inv(g)));
            out["iii|" + std::to_string(n) + "," + std::to_string(g)] =
                star.coeff(y_letter_word(n, g)) - (n % 2 ? b : Rational(-b));
        }
        break;
    }
    case Condition::StabMod: {
        SYLieOperator op(psi, true);
        auto apply = [&](const Word& u) -> const YSeries& { return op.of_word(u); };
        int room = cap - std::max(psi.min_degree(), 0);
        add_commutation(out, delta, all_y_words(group, room), apply);
        break;
    }
    case Condition::StabAlg: {
        GammaDY d(psi, AutYRoute::Explicit);
        auto apply = [&](const Word& u) -> const YSeries& { return d.of_word(u); };
        std::vector<Word> gens;
        int room = cap - std::max(psi.min_degree(), 0);
        for (int m = 1; m <= room; ++m)
            for (int g = 0; g < group.size(); ++g)
                gens.push_back(y_letter_word(m, g));
        add_commutation(out, delta, gens, apply);
        break;
    }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace

std::map<std::string, Rational> condition_image(Condition which, const XSeries& psi)
{
    HarmonicCoproduct<YTag> delta(psi.group_ptr(), psi.cap());
    return image_with(which, psi, delta);
}

QMatrix condition_matrix(Condition which, int n, const GroupSpec& spec, int cap, const std::vector<int>& order)
{
    if (n < 1 || n > cap)
        throw DomainError("condition_matrix: need 1 <= n <= cap");
    if (which == Condition::Dmr0 && !spec.is_cyclic())
        throw UnsupportedError("dmr0 conditions need a cyclic group, got " + spec.to_string());
    GroupPtr group = make_group(spec);
    auto basis = lyndon_basis(group, n, cap, order);
    std::vector<std::map<std::string, Rational>> images;
    images.reserve(basis.size());
    std::map<std::string, int> keys;
    // The coproduct memo is shared by all columns.
    HarmonicCoproduct<YTag> delta(group, cap);
    for (auto& element : basis) {
        images.push_back(image_with(which, element.expansion, delta));
        for (auto& [k, c] : images.back())
            keys.emplace(k, 0);
    }
    int row = 0;
    for (auto& [k, r] : keys)
        r = row++;
    QMatrix m(row, static_cast<int>(basis.size()));
    for (size_t j = 0; j < images.size(); ++j)
        for (auto& [k, c] : images[j])
            m.at(keys[k], static_cast<int>(j)) = c;
    return m;
}

Verdict lie_membership(Condition which, const XSeries& psi)
{
    switch (which) {
    case Condition::Dmr0:
        return dmr0_lie_membership(psi);
    case Condition::StabMod:
        return stab_mod_lie_membership(psi);
    case Condition::StabAlg:
        return stab_alg_lie_membership(psi);
    }
    throw InternalError("lie_membership: unknown condition");
}

namespace {

GradedKernelReport report_from_matrix(Condition which, int n, const GroupSpec& spec, int cap,
                                      const std::vector<LyndonElement>& basis, const QMatrix& m)
{
    GroupPtr group = basis.empty() ? make_group(spec) : basis.front().expansion.group_ptr();
    GradedKernelReport report;
    report.group = spec;
    report.degree = n;
    report.which = which;
    report.cap = cap;
    for (auto& e : basis)
        report.basis_labels.push_back(e.bracket);
    report.basis = matrix_nullspace(m);
    report.dimension = static_cast<int>(report.basis.size());
    for (auto& v : report.basis) {
        XSeries psi(group, cap);
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                psi += basis[j].expansion * v[j];
        Verdict check = lie_membership(which, psi);
        if (!check.member)
            throw InternalError("kernel vector of " + condition_name(which) + " in degree " + std::to_string(n)
                                + " fails membership: " + check.first_failure());
        report.elements.push_back(std::move(psi));
    }
    return report;
}

} // namespace

GradedKernelReport kernel_report(Condition which, int n, const GroupSpec& spec, int cap, const std::vector<int>& order)
{
    GroupPtr group = make_group(spec);
    auto basis = lyndon_basis(group, n, cap, order);
    QMatrix m = condition_matrix(which, n, spec, cap, order);
    return report_from_matrix(which, n, spec, cap, basis, m);
}

bool kernel_contained(const QMatrix& a, const QMatrix& b)
{
    if (a.cols() != b.cols())
        throw StructuralError("kernel_contained: column counts differ");
    for (auto& v : matrix_nullspace(a))
        for (auto& x : matrix_apply(b, v))
            if (x != 0)
                return false;
    return true;
}

Verdict inclusion_verdict(const QMatrix* dmr0, const QMatrix& stab_mod, const QMatrix& stab_alg)
{
    Verdict v;
    bool a = kernel_contained(stab_mod, stab_alg);
    v.add({"stab_mod in stab_alg", a, a ? "" : "a stab_mod kernel vector violates the stab_alg conditions"});
    if (dmr0) {
        bool b = kernel_contained(*dmr0, stab_mod);
        v.add({"dmr0 in stab_mod", b, b ? "" : "a dmr0 kernel vector violates the stab_mod conditions"});
    }
    return v;
}

Verdict inclusion_check(int n, const GroupSpec& spec, int cap)
{
    QMatrix mod = condition_matrix(Condition::StabMod, n, spec, cap);
    QMatrix alg = condition_matrix(Condition::StabAlg, n, spec, cap);
    if (!spec.is_cyclic())
        return inclusion_verdict(nullptr, mod, alg);
    QMatrix dmr = condition_matrix(Condition::Dmr0, n, spec, cap);
    return inclusion_verdict(&dmr, mod, alg);
}

DegreeSummary degree_summary(int n, const GroupSpec& spec, int cap)
{
    GroupPtr group = make_group(spec);
    auto basis = lyndon_basis(group, n, cap);
    DegreeSummary summary{spec, n, cap, {}, {}};
    std::map<Condition, QMatrix> matrices;
    for (Condition which : {Condition::Dmr0, Condition::StabMod, Condition::StabAlg}) {
        if (which == Condition::Dmr0 && !spec.is_cyclic())
            continue;
        matrices.emplace(which, condition_matrix(which, n, spec, cap));
        summary.reports.emplace(which, report_from_matrix(which, n, spec, cap, basis, matrices.at(which)));
    }
    auto dmr = matrices.find(Condition::Dmr0);
    summary.inclusions = inclusion_verdict(dmr == matrices.end() ? nullptr : &dmr->second,
                                           matrices.at(Condition::StabMod), matrices.at(Condition::StabAlg));
    return summary;
}

int default_worker_count()
{
    if (const char* env = std::getenv("DSH_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1)
                return n;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<DegreeSummary> dimension_table(const std::vector<GroupSpec>& groups, int max_degree, int workers)
{
    struct Job {
        GroupSpec spec;
        int n;
    };
    std::vector<Job> jobs;
    for (auto& spec : groups)
        for (int n = 1; n <= max_degree; ++n)
            jobs.push_back({spec, n});
    // The slowest jobs (largest group, highest degree) are started first.
    std::vector<size_t> schedule(jobs.size());
    std::iota(schedule.begin(), schedule.end(), 0);
    std::stable_sort(schedule.begin(), schedule.end(), [&](size_t a, size_t b) {
        return std::pair(jobs[a].n, jobs[a].spec.size()) > std::pair(jobs[b].n, jobs[b].spec.size());
    });

    std::vector<std::optional<DegreeSummary>> results(jobs.size());
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (size_t k = next++; k < schedule.size(); k = next++) {
            const Job& job = jobs[schedule[k]];
            try {
                results[schedule[k]] = degree_summary(job.n, job.spec, solver_cap(job.n));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    if (workers <= 0)
        workers = default_worker_count();
    workers = std::min<int>(workers, static_cast<int>(jobs.size()));
    std::vector<std::thread> threads;
    for (int i = 1; i < workers; ++i)
        threads.emplace_back(worker);
    worker();
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);

    std::vector<DegreeSummary> table;
    for (auto& r : results)
        table.push_back(std::move(*r));
    return table;
}

std::string format_dimension_table(const std::vector<DegreeSummary>& table)
{
    std::ostringstream out;
    out << "# group degree cap dmr0 stab_mod stab_alg inclusions\n";
    for (auto& row : table) {
        out << row.group.to_string() << ' ' << row.degree << ' ' << row.cap;
        for (Condition which : {Condition::Dmr0, Condition::StabMod, Condition::StabAlg}) {
            auto it = row.reports.find(which);
            out << ' ' << (it == row.reports.end() ? std::string("-") : std::to_string(it->second.dimension));
        }
        out << ' ' << (row.inclusions.member ? "ok" : "FAIL") << '\n';
    }
    return out.str();
}

} // namespace dsh
