#include "charblock/classalg.hpp"

#include <stdexcept>

#include "charblock/chartab.hpp"

namespace charblock {

namespace {

// all elements of each class, as group element indices
std::vector<std::vector<long>> class_members(const PermGroup &G,
                                             const ConjClasses &cc) {
  std::vector<std::vector<long>> members(static_cast<size_t>(cc.count()));
  for (long i = 0; i < G.order(); ++i)
    members[static_cast<size_t>(cc.class_of_elem[static_cast<size_t>(i)])]
        .push_back(i);
  return members;
}

void count_column(const PermGroup &G, const ConjClasses &cc,
                  const std::vector<std::vector<long>> &members, int M,
                  StructureConstants &sc) {
  int k = cc.count();
  const Perm &z = cc.reps[static_cast<size_t>(M)];
  for (int K = 0; K < k; ++K) {
    for (long xi : members[static_cast<size_t>(K)]) {
      Perm y = G.element(xi).inverse() * z;
      int L = cc.class_of_elem[static_cast<size_t>(G.index_of(y))];
      ++sc.at(K, L, M);
    }
  }
}

} // namespace

StructureConstants structure_constants_serial(const PermGroup &G,
                                              const ConjClasses &cc) {
  int k = cc.count();
  StructureConstants sc;
  sc.classes = k;
  sc.a.assign(static_cast<size_t>(k) * k * k, 0);
  auto members = class_members(G, cc);
  for (int M = 0; M < k; ++M)
    count_column(G, cc, members, M, sc);
  return sc;
}

StructureConstants structure_constants(const PermGroup &G,
                                       const ConjClasses &cc) {
  int k = cc.count();
  StructureConstants sc;
  sc.classes = k;
  sc.a.assign(static_cast<size_t>(k) * k * k, 0);
  auto members = class_members(G, cc);
#pragma omp parallel for schedule(dynamic)
  for (int M = 0; M < k; ++M)
    count_column(G, cc, members, M, sc);
  return sc;
}

StructureConstants structure_constants_from_table(const CharacterTable &T) {
  int k = T.class_count();
  int one = T.identity_class();
  StructureConstants sc;
  sc.classes = k;
  sc.a.assign(static_cast<size_t>(k) * k * k, 0);
  Rational order(T.group_order);
  for (int K = 0; K < k; ++K) {
    for (int L = 0; L < k; ++L) {
      Rational factor = Rational(T.classes[static_cast<size_t>(K)].size) *
                        Rational(T.classes[static_cast<size_t>(L)].size) /
                        order;
      for (int M = 0; M < k; ++M) {
        Cyclo sum;
        for (int chi = 0; chi < T.irr_count(); ++chi) {
          Cyclo term = T.value(chi, K) * T.value(chi, L) *
                       T.value(chi, M).conj();
          sum += term / T.value(chi, one);
        }
        Cyclo a = Cyclo(factor) * sum;
        if (!a.is_rational())
          throw VerificationError("table inconsistent");
        Rational q = a.rational_value();
        if (q.get_den() != 1 || q < 0)
          throw VerificationError("table inconsistent");
        sc.at(K, L, M) = static_cast<long>(q.get_num().get_si());
      }
    }
  }
  return sc;
}

} // namespace charblock
