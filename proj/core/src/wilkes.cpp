#include "pgog/wilkes.hpp"

#include <stdexcept>
#include <string>

namespace pgog {

namespace {

long long ipow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (1LL << 40)) throw std::overflow_error("power exceeds sane bounds");
  }
  return r;
}

GroupSpec h_spec(int p, int i) {
  return GroupSpec::elementary_abelian(p, int(ipow(p, i)))
      .with_label("H" + std::to_string(i));
}

GroupSpec k_spec(int p, int i) {
  return GroupSpec::product({GroupSpec::cyclic(p), h_spec(p, i)})
      .with_label("K" + std::to_string(i));
}

GraphOfGroups chain_from_stages(int p, const std::vector<WilkesStage>& stages, int m) {
  GraphOfGroups g;
  g.p = p;
  std::vector<int> verts;
  std::vector<EdgeRec> edges;
  for (int i = 1; i <= m; ++i) verts.push_back(i);
  for (int i = 1; i < m; ++i) edges.push_back(EdgeRec{i, i, i + 1});
  g.graph = make_graph(std::move(verts), std::move(edges));
  for (int i = 1; i <= m; ++i) g.vgroups.emplace(i, stages[i - 1].Gn);
  for (int i = 1; i < m; ++i) {
    g.egroups.emplace(i, stages[i - 1].Kn);
    g.b0.emplace(i, stages[i - 1].incl_K);
    g.b1.emplace(i, stages[i].incl_Kprev);
  }
  require_valid_gog(g);
  return g;
}

}  // namespace

int mu(int n, int p, int k) {
  if (n < 0 || !is_prime(p)) throw std::invalid_argument("mu needs n >= 0 and prime p");
  if (k < 0 || k >= ipow(p, n + 1))
    throw std::out_of_range("mu argument outside 0 .. p^(n+1)-1");
  return int(k % ipow(p, n));
}

WilkesStage build_stage(int p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("stage must be at least 1");
  long long rank_ll = ipow(p, n);
  if (rank_ll > 16) throw std::invalid_argument("stage exceeds the order cap");
  int rank = int(rank_ll);
  long long gorder = ipow(p, rank + 2);
  if (gorder > kDefaultOrderCap)
    throw std::invalid_argument("stage group order " + std::to_string(gorder) +
                                " exceeds the cap " + std::to_string(kDefaultOrderCap));
  int rank_prev = int(ipow(p, n - 1));

  GroupPtr hn = group_from_spec(h_spec(p, n));
  GroupPtr kn_g = group_from_spec(k_spec(p, n));
  GroupPtr hprev = group_from_spec(h_spec(p, n - 1));
  GroupPtr kprev_g = group_from_spec(k_spec(p, n - 1));

  // normal part: h_0 .. h_{rank-1} then k_n, most significant digit first
  int norder = int(ipow(p, rank + 1));
  long long ecrit = ipow(p, rank - rank_prev);  // digit weight of h_{p^{n-1}}
  std::vector<std::vector<Elt>> action(p, std::vector<Elt>(norder));
  for (int a = 0; a < p; ++a)
    for (int x = 0; x < norder; ++x) {
      if (n == 1) {
        action[a][x] = x;  // G_1 = K_1 x C_p
        continue;
      }
      int d = int((x / ecrit) % p);
      int dk = x % p;
      action[a][x] = x - dk + (dk + a * d) % p;
    }
  GroupSpec gspec =
      GroupSpec::semidirect(GroupSpec::elementary_abelian(p, rank + 1),
                            GroupSpec::cyclic(p), std::move(action))
          .with_label("G" + std::to_string(n));
  GroupPtr gn = group_from_spec(gspec);

  int ho = hn->order(), hpo = hprev->order();
  std::vector<Elt> m_inclH(ho);
  for (int v = 0; v < ho; ++v) m_inclH[v] = Elt(v * p * p);

  std::vector<Elt> m_inclK(kn_g->order());
  for (int idx = 0; idx < kn_g->order(); ++idx) {
    int c = idx / ho, v = idx % ho;
    m_inclK[idx] = Elt((v * p + c) * p);
  }

  long long shift = ipow(p, rank - rank_prev + 1);
  std::vector<Elt> m_inclKprev(kprev_g->order());
  for (int idx = 0; idx < kprev_g->order(); ++idx) {
    int c = idx / hpo, w = idx % hpo;
    m_inclKprev[idx] = Elt(w * shift * p + c);
  }

  auto fold = [&](long long hdigits_value, int ndigits) {
    // digits of an h-vector, most significant first, folded mod rank_prev
    std::vector<int> w(rank_prev, 0);
    long long weight = ipow(p, ndigits - 1);
    for (int i = 0; i < ndigits; ++i) {
      w[i % rank_prev] = (w[i % rank_prev] + int((hdigits_value / weight) % p)) % p;
      weight /= p;
    }
    int out = 0;
    for (int j = 0; j < rank_prev; ++j) out = out * p + w[j];
    return out;
  };

  std::vector<Elt> m_rho(gn->order());
  for (int g = 0; g < gn->order(); ++g) {
    int c = g % p;
    long long x = g / p;        // normal-part index
    long long hvalue = x / p;   // drop the k_n digit
    m_rho[g] = Elt(c * hpo + fold(hvalue, rank));
  }

  std::vector<Elt> m_eta(ho);
  for (int v = 0; v < ho; ++v) m_eta[v] = Elt(fold(v, rank));

  std::vector<Elt> m_hk(hpo);
  for (int w = 0; w < hpo; ++w) m_hk[w] = Elt(w);

  std::vector<Elt> h(rank);
  for (int i = 0; i < rank; ++i) h[i] = Elt(ipow(p, rank - i + 1));

  WilkesStage s{p,
                n,
                hn,
                kn_g,
                gn,
                hprev,
                kprev_g,
                GroupHom(hn, gn, std::move(m_inclH)),
                GroupHom(kprev_g, gn, std::move(m_inclKprev)),
                GroupHom(kn_g, gn, std::move(m_inclK)),
                GroupHom(gn, kprev_g, std::move(m_rho)),
                GroupHom(hn, hprev, std::move(m_eta)),
                GroupHom(hprev, kprev_g, std::move(m_hk)),
                std::move(h),
                Elt(p),
                Elt(1)};

  StageReport rep = verify_stage(s);
  if (!rep.all_ok()) {
    std::string msg = "stage realization failed verification:";
    for (const auto& pr : rep.problems) msg += " " + pr;
    throw std::logic_error(msg);
  }
  return s;
}

StageReport verify_stage(const WilkesStage& s) {
  StageReport rep;
  rep.p = s.p;
  rep.n = s.n;
  const FiniteGroup& g = *s.Gn;
  int p = s.p, rank = int(s.h.size());

  rep.h_order = s.Hn->order();
  rep.k_order = s.Kn->order();
  rep.g_order = g.order();
  rep.orders_ok = rep.h_order == ipow(p, rank) && rep.k_order == ipow(p, rank + 1) &&
                  rep.g_order == ipow(p, rank + 2);
  if (!rep.orders_ok) rep.problems.push_back("group orders off the p^(p^n) ladder");

  rep.inclusions_injective =
      s.incl_H.injective() && s.incl_Kprev.injective() && s.incl_K.injective();
  if (!rep.inclusions_injective) rep.problems.push_back("an inclusion is not injective");

  rep.relations_ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      rep.relations_ok = false;
      rep.problems.push_back(what);
    }
  };
  std::vector<Elt> gens = s.h;
  gens.push_back(s.kn);
  gens.push_back(s.kprev);
  for (Elt x : gens) expect(g.power(x, p) == g.identity(), "generator order is not p");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      expect(g.mul(s.h[i], s.h[j]) == g.mul(s.h[j], s.h[i]), "h generators do not commute");
  int crit = s.n >= 2 ? int(ipow(p, s.n - 1)) : -1;
  for (int i = 0; i < rank; ++i)
    if (i != crit)
      expect(g.mul(s.kprev, s.h[i]) == g.mul(s.h[i], s.kprev),
             "k_prev moves h_" + std::to_string(i));
  if (s.n >= 2) {
    Elt comm = g.mul(g.mul(g.inv(s.kprev), g.inv(s.h[crit])), g.mul(s.kprev, s.h[crit]));
    expect(comm == s.kn, "[k_prev, h_crit] is not k_n");
  }

  rep.kn_central = true;
  for (Elt x = 0; x < g.order(); ++x)
    if (g.mul(s.kn, x) != g.mul(x, s.kn)) {
      rep.kn_central = false;
      rep.problems.push_back("k_n is not central");
      break;
    }

  rep.generated_ok = subgroup_generated(s.Gn, gens).order() == g.order();
  if (!rep.generated_ok) rep.problems.push_back("named generators do not generate G_n");

  rep.retraction_ok = true;
  for (Elt x = 0; x < s.Kprev->order(); ++x)
    if (s.rho(s.incl_Kprev(x)) != x) {
      rep.retraction_ok = false;
      rep.problems.push_back("rho does not retract onto K_prev");
      break;
    }

  rep.square_ok = true;
  for (Elt v = 0; v < s.Hn->order(); ++v)
    if (s.rho(s.incl_H(v)) != s.h_in_kprev(s.eta(v))) {
      rep.square_ok = false;
      rep.problems.push_back("rho and eta do not commute over H_n");
      break;
    }

  return rep;
}

GraphOfGroups build_chain_gog(int p, int m) {
  if (m < 1) throw std::invalid_argument("chain needs at least one vertex");
  std::vector<WilkesStage> stages;
  for (int i = 1; i <= m; ++i) stages.push_back(build_stage(p, i));
  return chain_from_stages(p, stages, m);
}

GogMorphism chain_retraction_morphism(int p, int m) {
  if (m < 1) throw std::invalid_argument("retraction needs a chain of length >= 1");
  std::vector<WilkesStage> stages;
  for (int i = 1; i <= m + 1; ++i) stages.push_back(build_stage(p, i));

  GogMorphism mor;
  mor.source = chain_from_stages(p, stages, m + 1);
  mor.target = chain_from_stages(p, stages, m);
  for (int i = 1; i <= m; ++i) {
    mor.vertex_map[i] = i;
    mor.vmaps.emplace(i, identity_hom(stages[i - 1].Gn));
  }
  mor.vertex_map[m + 1] = m;
  mor.vmaps.emplace(m + 1, compose(stages[m - 1].incl_K, stages[m].rho));
  for (int i = 1; i < m; ++i) {
    mor.edge_map[i] = GogMorphism::EdgeImage{false, i};
    mor.emaps.emplace(i, identity_hom(stages[i - 1].Kn));
  }
  mor.edge_map[m] = GogMorphism::EdgeImage{true, m};
  mor.emaps.emplace(m, stages[m - 1].incl_K);
  return mor;
}

}  // namespace pgog
