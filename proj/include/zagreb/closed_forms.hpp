#pragma once

#include "zagreb/invariants.hpp"

namespace zagreb {

// Closed-form EM1 evaluators. They consume stats and aggregates rather than
// graphs, so the formulas can be checked against each other and against the
// definitional oracle independently. All arithmetic is checked 64-bit.

/// EM1 of the generalized hierarchical product from component stats, the
/// U-aggregates of h and |U|.
long long em1_hierarchical_formula(const GraphStats& gs, const GraphStats& hs,
                                   const UAggregates& ua, long long u_size);

/// EM1 of the Cartesian product; the U = V(h) specialization.
long long em1_cartesian_formula(const GraphStats& gs, const GraphStats& hs);

/// EM1 of the cluster product g{h} from the root's degree and neighbor
/// degree sum; the U = {root} specialization.
long long em1_cluster_formula(const GraphStats& gs, long long h_em1, long long root_degree,
                              long long root_nbr_deg_sum);

/// EM1 of P2 PI h(U); the g = P2 specialization.
long long em1_p2_hierarchical_formula(long long h_em1, const UAggregates& ua);

/// EM1 of the cluster of an r-regular graph on n_g vertices with an
/// s-regular rooted graph on n_h vertices.
long long em1_cluster_regular_formula(long long r, long long s, long long n_g, long long n_h);

/// EM1 of the t-thorn graph of a graph with the given invariants.
long long em1_thorn_formula(long long em1_g, long long m1_g, long long n, long long m,
                            long long t);

/// EM1 of g{P2}, one pendant vertex per vertex of g.
long long em1_pendant_formula(long long em1_g, long long m1_g, long long m);

/// A family formula evaluated two ways: exactly as printed in its source,
/// and in the oracle-validated corrected form.
struct FormulaPair {
    long long paper_value = 0;
    long long corrected_value = 0;

    bool agrees() const { return paper_value == corrected_value; }
    bool operator==(const FormulaPair&) const = default;
};

// Printed-vs-corrected formulas for the named graph families. Parameters
// outside a family's validity range throw std::domain_error.

FormulaPair hex_chain_formula(long long n);                    // n >= 1
FormulaPair polyhex_formula(long long n);                      // n >= 2
FormulaPair phenylene_formula(long long n);                    // n >= 1
FormulaPair dendron_formula(long long p, long long r);         // p >= 2, r >= 2
FormulaPair dendrimer_formula(long long p, long long r);       // p >= 2, r >= 2
FormulaPair sun_formula(long long m, long long n);             // m >= 3, n >= 2
FormulaPair comb_formula(long long n);                         // n >= 3
FormulaPair cluster_cycles_formula(long long n, long long m);  // n, m >= 3
FormulaPair cluster_completes_formula(long long n, long long m);  // n, m >= 2

}  // namespace zagreb
