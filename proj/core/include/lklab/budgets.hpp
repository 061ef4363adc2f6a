#pragma once

namespace lklab {

// Size budgets for the exact solvers. Instances above a budget raise
// BudgetExceeded instead of running forever. Defaults are the documented
// desk-scale limits; LKLAB_BUDGET overrides them as a comma list, e.g.
//   LKLAB_BUDGET="alpha=500,enum=40,chi=30,psi=12,hom_domain=10,hom_codomain=40,nu=10"
struct Budgets {
    int alpha_vertices = 2000;      // exact maximum-independent-set solver
    int enum_vertices = 60;         // maximum-independent-set enumeration
    int chi_vertices = 60;          // exact chromatic number
    int psi_vertices = 15;          // exact local chromatic number
    int hom_domain_vertices = 15;   // homomorphism existence search, domain
    int hom_codomain_vertices = 60; // homomorphism existence search, codomain
    int nu_domain_vertices = 12;    // nu/mu brute force with a general target

    // Reads LKLAB_BUDGET from the environment; unknown keys are rejected.
    static Budgets from_env();
};

} // namespace lklab
