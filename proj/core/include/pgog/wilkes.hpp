#pragma once

#include "pgog/gog.hpp"

// Finite stages of an inaccessible group: G_n is generated by k_{n-1}, k_n and
// commuting involution-like generators h_0 .. h_{p^n - 1}, with k_n central
// and equal to [k_{n-1}, h_{p^{n-1}}] for n >= 2 (G_1 is the direct product
// K_1 x C_p).  Chains of these stages glued along K_n give reduced graphs of
// groups whose edge count grows with the chain length.

namespace pgog {

// k mod p^n, defined for 0 <= k < p^{n+1}
int mu(int n, int p, int k);

struct WilkesStage {
  int p;
  int n;
  GroupPtr Hn, Kn, Gn;
  GroupPtr Hprev, Kprev;
  GroupHom incl_H;      // H_n -> G_n
  GroupHom incl_Kprev;  // K_{n-1} -> G_n
  GroupHom incl_K;      // K_n -> G_n
  GroupHom rho;         // G_n -> K_{n-1}: kills k_n, folds h_k onto h_{mu(k)}
  GroupHom eta;         // H_n -> H_{n-1}, the same folding
  GroupHom h_in_kprev;  // H_{n-1} -> K_{n-1}, second factor
  std::vector<Elt> h;   // h_0 .. h_{p^n - 1} inside G_n
  Elt kn;
  Elt kprev;
};

struct StageReport {
  int p = 0, n = 0;
  long long h_order = 0, k_order = 0, g_order = 0;
  bool orders_ok = false;
  bool inclusions_injective = false;
  bool relations_ok = false;
  bool kn_central = false;
  bool generated_ok = false;   // named generators generate all of G_n
  bool retraction_ok = false;  // rho after incl_Kprev is the identity
  bool square_ok = false;      // rho after incl_H equals h_in_kprev after eta
  std::vector<std::string> problems;

  bool all_ok() const {
    return orders_ok && inclusions_injective && relations_ok && kn_central &&
           generated_ok && retraction_ok && square_ok;
  }
};

// buildable while p^(p^n + 2) stays under the order cap: p=2 up to n=3,
// p=3 only n=1
WilkesStage build_stage(int p, int n);

StageReport verify_stage(const WilkesStage& s);

// path with vertices 1..m carrying G_1..G_m; edge i embeds K_i into G_i and
// into G_{i+1}
GraphOfGroups build_chain_gog(int p, int m);

// chain(m+1) -> chain(m): identity on the shared prefix, the last edge
// collapses onto vertex m, and G_{m+1} maps through rho into K_m <= G_m
GogMorphism chain_retraction_morphism(int p, int m);

}  // namespace pgog
