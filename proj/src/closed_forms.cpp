#include "zagreb/closed_forms.hpp"

#include <stdexcept>

#include "zagreb/checked.hpp"

namespace zagreb {

namespace {

void require(bool ok, const char* message) {
    if (!ok)
        throw std::domain_error(message);
}

long long ipow(long long base, long long exp) {
    long long result = 1;
    for (long long i = 0; i < exp; ++i)
        result = checked_mul(result, base);
    return result;
}

}  // namespace

long long em1_hierarchical_formula(const GraphStats& gs, const GraphStats& hs,
                                   const UAggregates& ua, long long u_size) {
    long long total = checked_mul(gs.n, hs.em1);
    total = checked_add(total, checked_mul(u_size, gs.em1));
    total = checked_add(total, checked_mul(5, checked_mul(gs.m1, ua.sigma1)));
    total = checked_add(total, checked_mul(8, checked_mul(gs.m, ua.sigma2)));
    total = checked_add(total, checked_mul(2, checked_mul(gs.m1, ua.epsilon)));
    total = checked_add(total, checked_mul(4, checked_mul(gs.m, ua.nu)));
    return checked_sub(total, checked_mul(16, checked_mul(gs.m, ua.sigma1)));
}

long long em1_cartesian_formula(const GraphStats& gs, const GraphStats& hs) {
    long long total = checked_add(checked_mul(gs.n, hs.em1), checked_mul(hs.n, gs.em1));
    total = checked_add(total, checked_mul(12, checked_mul(gs.m, hs.m1)));
    total = checked_add(total, checked_mul(12, checked_mul(hs.m, gs.m1)));
    return checked_sub(total, checked_mul(32, checked_mul(gs.m, hs.m)));
}

long long em1_cluster_formula(const GraphStats& gs, long long h_em1, long long root_degree,
                              long long root_nbr_deg_sum) {
    long long total = checked_add(checked_mul(gs.n, h_em1), gs.em1);
    total = checked_add(total, checked_mul(5, checked_mul(root_degree, gs.m1)));
    total = checked_add(total, checked_mul(8, checked_mul(gs.m, checked_mul(root_degree, root_degree))));
    total = checked_add(total, checked_mul(4, checked_mul(gs.m, root_nbr_deg_sum)));
    return checked_sub(total, checked_mul(16, checked_mul(gs.m, root_degree)));
}

long long em1_p2_hierarchical_formula(long long h_em1, const UAggregates& ua) {
    long long total = checked_mul(2, h_em1);
    total = checked_add(total, checked_mul(8, ua.sigma2));
    total = checked_sub(total, checked_mul(6, ua.sigma1));
    total = checked_add(total, checked_mul(4, ua.epsilon));
    return checked_add(total, checked_mul(4, ua.nu));
}

long long em1_cluster_regular_formula(long long r, long long s, long long n_g, long long n_h) {
    require(r >= 0 && s >= 0, "regular degrees must be non-negative");
    long long bracket = checked_mul(2, checked_mul(s, checked_mul(checked_mul(s - 1, s - 1), n_h)));
    bracket = checked_add(bracket, checked_mul(2, checked_mul(r, checked_mul(r - 1, r - 1))));
    bracket = checked_add(bracket, checked_mul(5, checked_mul(r, checked_mul(r, s))));
    bracket = checked_add(bracket, checked_mul(6, checked_mul(r, checked_mul(s, s))));
    bracket = checked_sub(bracket, checked_mul(8, checked_mul(r, s)));
    return checked_mul(n_g, bracket);
}

long long em1_thorn_formula(long long em1_g, long long m1_g, long long n, long long m,
                            long long t) {
    require(t >= 0, "thorn count must be non-negative");
    long long total = checked_add(em1_g, checked_mul(5, checked_mul(t, m1_g)));
    total = checked_add(total, checked_mul(n, checked_mul(t, checked_mul(t - 1, t - 1))));
    total = checked_add(total, checked_mul(8, checked_mul(m, checked_mul(t, t))));
    return checked_sub(total, checked_mul(12, checked_mul(m, t)));
}

long long em1_pendant_formula(long long em1_g, long long m1_g, long long m) {
    return checked_sub(checked_add(em1_g, checked_mul(5, m1_g)), checked_mul(4, m));
}

FormulaPair hex_chain_formula(long long n) {
    require(n >= 1, "hex chain requires n >= 1");
    const long long value = checked_sub(checked_mul(52, n), 28);
    return {value, value};
}

FormulaPair polyhex_formula(long long n) {
    require(n >= 2, "polyhex requires n >= 2");
    const long long value = checked_mul(52, n);
    return {value, value};
}

FormulaPair phenylene_formula(long long n) {
    require(n >= 1, "phenylene requires n >= 1");
    return {checked_sub(checked_mul(96, n), 72), checked_sub(checked_mul(100, n), 76)};
}

FormulaPair dendron_formula(long long p, long long r) {
    require(p >= 2, "dendron requires p >= 2");
    require(r >= 2, "dendron formula requires r >= 2");
    // p(p^(r+2) + 3p^(r+1) - 8p^2 + 5p - 1) / (p - 1); printed and corrected agree.
    long long bracket = checked_add(ipow(p, r + 2), checked_mul(3, ipow(p, r + 1)));
    bracket = checked_sub(bracket, checked_mul(8, checked_mul(p, p)));
    bracket = checked_add(bracket, checked_sub(checked_mul(5, p), 1));
    const long long value = checked_div_exact(checked_mul(p, bracket), p - 1);
    return {value, value};
}

FormulaPair dendrimer_formula(long long p, long long r) {
    require(p >= 2, "dendrimer requires p >= 2");
    require(r >= 2, "dendrimer formula requires r >= 2");
    const long long lead = checked_mul(2, checked_mul(p, p));
    const long long tail = checked_add(checked_mul(2, p), 2);
    // Printed form subtracts the 3p^r term; the corrected form adds it.
    const long long printed_bracket =
        checked_sub(checked_sub(ipow(p, r + 1), checked_mul(3, ipow(p, r))), tail);
    const long long corrected_bracket =
        checked_sub(checked_add(ipow(p, r + 1), checked_mul(3, ipow(p, r))), tail);
    return {checked_div_exact(checked_mul(lead, printed_bracket), p - 1),
            checked_div_exact(checked_mul(lead, corrected_bracket), p - 1)};
}

FormulaPair sun_formula(long long m, long long n) {
    require(m >= 3, "sun requires m >= 3");
    require(n >= 2, "sun formula requires n >= 2");
    const long long value = checked_mul(2, checked_mul(m, checked_add(checked_mul(2, n), 9)));
    return {value, value};
}

FormulaPair comb_formula(long long n) {
    require(n >= 3, "comb formula requires n >= 3");
    const long long printed =
        checked_sub(checked_add(checked_mul(8, checked_mul(n, n)), checked_mul(10, n)), 38);
    const long long corrected =
        checked_sub(checked_add(checked_mul(4, checked_mul(n, n)), checked_mul(14, n)), 40);
    return {printed, corrected};
}

FormulaPair cluster_cycles_formula(long long n, long long m) {
    require(n >= 3 && m >= 3, "cycle cluster requires n, m >= 3");
    const long long value = checked_mul(4, checked_mul(n, checked_add(m, 15)));
    return {value, value};
}

FormulaPair cluster_completes_formula(long long n, long long m) {
    require(n >= 2 && m >= 2, "complete cluster requires n, m >= 2");
    // Printed bracket leads with 2m(n-1)(n-2)^2 + 2(m-1)(m-2)^2; corrected is
    // the regular-cluster formula at r = n-1, s = m-1, whose leading terms are
    // 2m(m-1)(m-2)^2 + 2(n-1)(n-2)^2.
    const long long shared = checked_sub(
        checked_add(checked_mul(5, checked_mul(checked_mul(n - 1, n - 1), m - 1)),
                    checked_mul(6, checked_mul(n - 1, checked_mul(m - 1, m - 1)))),
        checked_mul(8, checked_mul(n - 1, m - 1)));
    long long printed_bracket = checked_mul(2, checked_mul(m, checked_mul(n - 1, checked_mul(n - 2, n - 2))));
    printed_bracket = checked_add(printed_bracket, checked_mul(2, checked_mul(m - 1, checked_mul(m - 2, m - 2))));
    printed_bracket = checked_add(printed_bracket, shared);
    return {checked_mul(n, printed_bracket), em1_cluster_regular_formula(n - 1, m - 1, n, m)};
}

}  // namespace zagreb
