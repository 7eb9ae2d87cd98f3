#include "charblock/charops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace charblock {

ClassFunction class_function(const CharacterTable &T, std::vector<Cyclo> v) {
  if (v.size() != static_cast<size_t>(T.class_count()))
    throw std::runtime_error("class function has wrong length");
  return ClassFunction{&T, std::move(v)};
}

ClassFunction irr_row(const CharacterTable &T, int i) {
  return ClassFunction{&T, T.irr[static_cast<size_t>(i)]};
}

ClassFunction principal_character(const CharacterTable &T) {
  return ClassFunction{
      &T, std::vector<Cyclo>(static_cast<size_t>(T.class_count()), Cyclo(1))};
}

ClassFunction regular_character(const CharacterTable &T) {
  std::vector<Cyclo> v(static_cast<size_t>(T.class_count()), Cyclo(0));
  v[static_cast<size_t>(T.identity_class())] = Cyclo(T.group_order);
  return ClassFunction{&T, std::move(v)};
}

ClassFunction zero_function(const CharacterTable &T) {
  return ClassFunction{
      &T, std::vector<Cyclo>(static_cast<size_t>(T.class_count()), Cyclo(0))};
}

FusionMap build_fusion(const GroupData &gd, const GroupData &hd) {
  if (hd.G.degree() != gd.G.degree())
    throw std::runtime_error("fusion: degree mismatch");
  FusionMap f;
  f.h_to_g.resize(static_cast<size_t>(hd.cc.count()));
  for (int k = 0; k < hd.cc.count(); ++k) {
    const Perm &rep = hd.cc.reps[static_cast<size_t>(k)];
    if (!gd.G.contains(rep))
      throw std::runtime_error("fusion: subgroup element not in the group");
    f.h_to_g[static_cast<size_t>(k)] = gd.cc.class_of(gd.G, rep);
  }
  return f;
}

static void require_same_table(const ClassFunction &a,
                               const ClassFunction &b) {
  if (a.table != b.table ||
      a.values.size() != b.values.size())
    throw std::runtime_error("class functions live on different tables");
}

Cyclo inner_product(const ClassFunction &phi, const ClassFunction &psi) {
  require_same_table(phi, psi);
  const CharacterTable &T = *phi.table;
  Cyclo s;
  for (int K = 0; K < T.class_count(); ++K)
    s += Cyclo(Rational(T.classes[static_cast<size_t>(K)].size)) * phi[K] *
         psi[K].conj();
  return s / Cyclo(Rational(T.group_order));
}

Cyclo inner_product_p_regular(const ClassFunction &phi,
                              const ClassFunction &psi, int p) {
  require_same_table(phi, psi);
  const CharacterTable &T = *phi.table;
  Cyclo s;
  for (int K = 0; K < T.class_count(); ++K) {
    if (T.classes[static_cast<size_t>(K)].order % p == 0)
      continue;
    s += Cyclo(Rational(T.classes[static_cast<size_t>(K)].size)) * phi[K] *
         psi[K].conj();
  }
  return s / Cyclo(Rational(T.group_order));
}

Decomposition decompose(const ClassFunction &phi) {
  const CharacterTable &T = *phi.table;
  Decomposition d;
  d.is_character = true;
  d.is_generalized = true;
  for (int i = 0; i < T.irr_count(); ++i) {
    Cyclo c = inner_product(phi, irr_row(T, i));
    if (!c.is_rational() || c.rational_value().get_den() != 1) {
      d.is_character = d.is_generalized = false;
    } else if (c.rational_value() < 0) {
      d.is_character = false;
    }
    d.coeffs.push_back(std::move(c));
  }
  return d;
}

ClassFunction induce(const ClassFunction &phi, const CharacterTable &TH,
                     const CharacterTable &TG, const FusionMap &fusion) {
  if (phi.table != &TH)
    throw std::runtime_error("induce: function not on the subgroup table");
  if (fusion.h_to_g.size() != static_cast<size_t>(TH.class_count()))
    throw std::runtime_error("induce: fusion map inconsistent");
  std::vector<Cyclo> out(static_cast<size_t>(TG.class_count()), Cyclo(0));
  // phi^G(g) = |C_G(g)| sum over H-classes inside g^G of phi(x)/|C_H(x)|
  for (int hk = 0; hk < TH.class_count(); ++hk) {
    int gk = fusion.h_to_g[static_cast<size_t>(hk)];
    out[static_cast<size_t>(gk)] +=
        phi[hk] / Cyclo(Rational(TH.classes[static_cast<size_t>(hk)].centralizer));
  }
  for (int gk = 0; gk < TG.class_count(); ++gk)
    out[static_cast<size_t>(gk)] *=
        Cyclo(Rational(TG.classes[static_cast<size_t>(gk)].centralizer));
  return ClassFunction{&TG, std::move(out)};
}

ClassFunction restrict_to(const ClassFunction &psi, const CharacterTable &TH,
                          const FusionMap &fusion) {
  std::vector<Cyclo> out(static_cast<size_t>(TH.class_count()));
  for (int hk = 0; hk < TH.class_count(); ++hk)
    out[static_cast<size_t>(hk)] =
        psi[fusion.h_to_g[static_cast<size_t>(hk)]];
  return ClassFunction{&TH, std::move(out)};
}

ClassFunction pointwise_product(const ClassFunction &a,
                                const ClassFunction &b) {
  require_same_table(a, b);
  std::vector<Cyclo> out(a.values.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = a.values[i] * b.values[i];
  return ClassFunction{a.table, std::move(out)};
}

ClassFunction complex_conjugate(const ClassFunction &a) {
  std::vector<Cyclo> out(a.values.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = a.values[i].conj();
  return ClassFunction{a.table, std::move(out)};
}

ClassFunction contragredient(const ClassFunction &a, const GroupData &gd) {
  if (static_cast<size_t>(gd.cc.count()) != a.values.size())
    throw std::runtime_error("contragredient: class count mismatch");
  std::vector<Cyclo> out(a.values.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[static_cast<size_t>(gd.cc.inverse_map[i])] = a.values[i];
  return ClassFunction{a.table, std::move(out)};
}

PermCharStats permutation_character(const GroupData &gd,
                                    const CharacterTable &T) {
  PermCharStats st;
  std::vector<Cyclo> v(static_cast<size_t>(gd.cc.count()));
  for (int k = 0; k < gd.cc.count(); ++k) {
    const Perm &rep = gd.cc.reps[static_cast<size_t>(k)];
    long fixed = 0;
    for (int x = 0; x < gd.G.degree(); ++x)
      if (rep.image(x) == x)
        ++fixed;
    v[static_cast<size_t>(k)] = Cyclo(fixed);
  }
  st.character = class_function(T, std::move(v));
  Cyclo orbits = inner_product(st.character, principal_character(T));
  Cyclo rank = inner_product(st.character, st.character);
  if (!orbits.is_rational() || !rank.is_rational())
    throw std::runtime_error("permutation character statistics irrational");
  st.orbit_count = static_cast<long>(orbits.rational_value().get_num().get_si());
  st.rank = rank.rational_value();
  st.two_transitive =
      st.orbit_count == 1 && st.rank == 2 && gd.G.degree() >= 2;

  // divisibility checks for the transitive case
  if (st.orbit_count == 1) {
    int one = T.identity_class();
    Rational deg = st.character[one].rational_value();
    long deg_i = static_cast<long>(deg.get_num().get_si());
    if (deg_i <= 0 || T.group_order % deg_i != 0)
      st.divisibility_failures.push_back("degree does not divide |G|");
    for (int k = 0; k < T.class_count(); ++k) {
      // |g^G cap H| = chi(g)|G| / (chi(1)|C_G(g)|) must be a nonnegative
      // integer
      Cyclo val = st.character[k];
      Rational q = val.rational_value() * Rational(T.group_order) /
                   (deg * Rational(T.classes[static_cast<size_t>(k)].centralizer));
      if (q.get_den() != 1 || q < 0)
        st.divisibility_failures.push_back(
            "point-stabilizer intersection count fails for class " +
            T.classes[static_cast<size_t>(k)].name);
    }
  }
  return st;
}

InertiaResult inertia_group(const ClassFunction &theta,
                            const CharacterTable &TH, const GroupData &hd,
                            const GroupData &gd, const CharacterTable &TG,
                            int chi_index, const FusionMap &fusion) {
  // verify H normal in G
  std::set<Perm> hset(hd.G.elements().begin(), hd.G.elements().end());
  for (const auto &g : gd.G.generators())
    for (const auto &h : hd.G.elements())
      if (!hset.count(h.conjugated_by(g)))
        throw std::runtime_error("inertia_group: subgroup is not normal");

  // theta^x(h) = theta(x h x^{-1}); stabilizer scan over G
  auto value_at = [&](const Perm &h) -> const Cyclo & {
    return theta[hd.cc.class_of(hd.G, h)];
  };
  InertiaResult res;
  long order = 0;
  std::vector<std::vector<Cyclo>> conjugates;
  for (const auto &x : gd.G.elements()) {
    std::vector<Cyclo> tx(static_cast<size_t>(hd.cc.count()));
    bool same = true;
    for (int k = 0; k < hd.cc.count(); ++k) {
      const Perm conj =
          hd.cc.reps[static_cast<size_t>(k)].conjugated_by(x.inverse());
      tx[static_cast<size_t>(k)] = value_at(conj);
      if (tx[static_cast<size_t>(k)] != theta[k])
        same = false;
    }
    if (same)
      ++order;
    if (std::find(conjugates.begin(), conjugates.end(), tx) ==
        conjugates.end())
      conjugates.push_back(std::move(tx));
  }
  res.order = order;
  res.orbit_size = static_cast<long>(conjugates.size());

  // Clifford: chi_H = e (theta_1 + ... + theta_t) with t = |G : I|
  ClassFunction chi_h = restrict_to(irr_row(TG, chi_index), TH, fusion);
  ClassFunction theta_cf{&TH, theta.values};
  Cyclo e = inner_product(chi_h, theta_cf);
  if (e.is_rational() && e.rational_value() > 0) {
    std::vector<Cyclo> sum(static_cast<size_t>(hd.cc.count()), Cyclo(0));
    for (const auto &tx : conjugates)
      for (size_t k = 0; k < sum.size(); ++k)
        sum[k] += tx[k];
    bool match = true;
    for (int k = 0; k < hd.cc.count(); ++k)
      if (chi_h[k] != e * sum[static_cast<size_t>(k)])
        match = false;
    res.clifford_consistent =
        match && res.orbit_size * res.order == gd.G.order();
  }
  return res;
}

FrobeniusKernelResult frobenius_kernel(const GroupData &gd,
                                       const CharacterTable &TG,
                                       const GroupData &hd) {
  const PermGroup &G = gd.G;
  const PermGroup &H = hd.G;
  if (H.order() <= 1 || H.order() >= G.order())
    throw std::runtime_error("frobenius_kernel: need 1 < H < G");
  // Frobenius condition H cap H^x = 1 for x outside H
  std::set<Perm> hset(H.elements().begin(), H.elements().end());
  for (const auto &x : G.elements()) {
    if (hset.count(x))
      continue;
    for (const auto &h : H.elements()) {
      if (h.is_identity())
        continue;
      if (hset.count(h.conjugated_by(x)))
        throw std::runtime_error(
            "frobenius_kernel: H is not a Frobenius complement");
    }
  }

  CharacterTable TH = compute_table(hd, "H");
  FusionMap fusion = build_fusion(gd, hd);
  long n = G.order() / H.order();

  // kernel = intersection over nontrivial theta of ker(d 1_G - (d 1_H -
  // theta)^G); built purely from characters
  ClassSet kernel;
  for (int K = 0; K < TG.class_count(); ++K)
    kernel.insert(K);
  int one_h = TH.identity_class();
  for (int t = 0; t < TH.irr_count(); ++t) {
    bool principal = true;
    for (int k = 0; k < TH.class_count(); ++k)
      if (TH.value(t, k) != Cyclo(1))
        principal = false;
    if (principal)
      continue;
    Cyclo d = TH.value(t, one_h);
    // psi = d 1_H - theta, chi = d 1_G - psi^G
    std::vector<Cyclo> psi(static_cast<size_t>(TH.class_count()));
    for (int k = 0; k < TH.class_count(); ++k)
      psi[static_cast<size_t>(k)] = d - TH.value(t, k);
    ClassFunction psi_g =
        induce(class_function(TH, std::move(psi)), TH, TG, fusion);
    ClassSet ker;
    for (int K = 0; K < TG.class_count(); ++K) {
      Cyclo chi_val = d - psi_g[K];
      if (chi_val == d)
        ker.insert(K);
    }
    ClassSet inter;
    std::set_intersection(kernel.begin(), kernel.end(), ker.begin(),
                          ker.end(), std::inserter(inter, inter.begin()));
    kernel = std::move(inter);
  }

  FrobeniusKernelResult res;
  res.kernel_classes = kernel;
  for (int K : kernel)
    res.order += TG.classes[static_cast<size_t>(K)].size;
  if (res.order != n)
    throw std::runtime_error("frobenius_kernel: kernel order mismatch");
  return res;
}

} // namespace charblock
