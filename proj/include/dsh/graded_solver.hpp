#pragma once

#include "group.hpp"
#include "qmatrix.hpp"
#include "racinet_group.hpp"
#include "series.hpp"

#include <map>
#include <string>
#include <vector>

namespace dsh {

enum class Condition { Dmr0, StabMod, StabAlg };

std::string condition_name(Condition which);
Condition parse_condition(const std::string& name);

// The linear conditions of one family applied to a homogeneous Lie element,
// keyed by a label for each scalar constraint. Zero entries are omitted.
std::map<std::string, Rational> condition_image(Condition which, const XSeries& psi);

// Rows: every scalar constraint produced by some Lyndon basis element of
// degree n; columns: that basis, in Lyndon order for the given letter order.
QMatrix condition_matrix(Condition which, int n, const GroupSpec& spec, int cap, const std::vector<int>& order = {});

struct GradedKernelReport {
    GroupSpec group;
    int degree = 0;
    Condition which = Condition::Dmr0;
    int cap = 0;
    int dimension = 0;
    std::vector<std::string> basis_labels; // bracketed Lyndon words
    std::vector<QVector> basis;            // kernel vectors in Lyndon coordinates
    std::vector<XSeries> elements;         // the same vectors expanded
};

// Kernel of condition_matrix; every vector is re-checked with the matching
// membership test and an InternalError is raised if one fails.
GradedKernelReport kernel_report(Condition which, int n, const GroupSpec& spec, int cap,
                                 const std::vector<int>& order = {});

// ker(a) is contained in ker(b); both matrices share their column space.
bool kernel_contained(const QMatrix& a, const QMatrix& b);

// ker(stab_mod) in ker(stab_alg), and ker(dmr0) in ker(stab_mod) when a dmr0
// matrix is given. All matrices share the Lyndon columns of one degree.
Verdict inclusion_verdict(const QMatrix* dmr0, const QMatrix& stab_mod, const QMatrix& stab_alg);
// The same, building the matrices; dmr0 is included for cyclic G.
Verdict inclusion_check(int n, const GroupSpec& spec, int cap);

// Truncation used for degree n in dimension tables. The stab kernels only see
// constraints of total weight <= cap; from n + 2 on they no longer shrink in
// any computed case.
inline int solver_cap(int n) { return n + 2; }

struct DegreeSummary {
    GroupSpec group;
    int degree = 0;
    int cap = 0;
    std::map<Condition, GradedKernelReport> reports; // dmr0 absent for non-cyclic G
    Verdict inclusions;
};

// Every applicable family in one degree, each condition matrix built once.
DegreeSummary degree_summary(int n, const GroupSpec& spec, int cap);

// DSH_WORKERS if set to a positive integer, else the hardware thread count.
int default_worker_count();

// degree_summary at solver_cap(n) for every group and 1 <= n <= max_degree,
// ordered by group then degree whatever the number of workers (<= 0 means
// default_worker_count()).
std::vector<DegreeSummary> dimension_table(const std::vector<GroupSpec>& groups, int max_degree, int workers = 0);

// One line per summary: group degree cap dmr0 stab_mod stab_alg ok|FAIL,
// with "-" for a family that does not apply. This is the golden-file format.
std::string format_dimension_table(const std::vector<DegreeSummary>& table);

// Membership test matching a condition family.
Verdict lie_membership(Condition which, const XSeries& psi);

} // namespace dsh
