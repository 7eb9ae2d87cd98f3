#ifndef CHARBLOCK_PERM_HPP
#define CHARBLOCK_PERM_HPP

#include <string>
#include <vector>

namespace charblock {

/// Permutation of {0..degree-1}; elements act on the right, so
/// x^(ab) = (x^a)^b.
class Perm {
public:
  explicit Perm(int degree) : img_(static_cast<size_t>(degree)) {
    for (int i = 0; i < degree; ++i)
      img_[static_cast<size_t>(i)] = i;
  }
  explicit Perm(std::vector<int> images);

  // disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"
  static Perm from_cycles(int degree, const std::string &cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int x) const { return img_[static_cast<size_t>(x)]; }

  Perm operator*(const Perm &o) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm &g) const; // g^{-1} * this * g
  Perm power(long n) const;

  bool is_identity() const;
  int order() const;

  bool operator==(const Perm &o) const { return img_ == o.img_; }
  bool operator!=(const Perm &o) const { return img_ != o.img_; }
  bool operator<(const Perm &o) const { return img_ < o.img_; }

  std::string to_cycle_string() const; // "()" for the identity

private:
  std::vector<int> img_;
};

inline constexpr long kDefaultOrderCap = 20000;

/// Fully enumerated permutation group; elements kept sorted so indices
/// are canonical.
class PermGroup {
public:
  // Enumerates <generators> by closure; throws "group too large" if the
  // order exceeds the cap.
  static PermGroup generated(std::vector<Perm> generators,
                             long max_order = kDefaultOrderCap);
  // Wraps an already-closed element set (sorted internally).
  static PermGroup from_elements(std::vector<Perm> elements,
                                 std::vector<Perm> generators = {});

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elems_.size()); }
  const std::vector<Perm> &elements() const { return elems_; }
  const std::vector<Perm> &generators() const { return gens_; }
  const Perm &element(long i) const { return elems_[static_cast<size_t>(i)]; }

  long index_of(const Perm &g) const; // -1 if not a member
  bool contains(const Perm &g) const { return index_of(g) >= 0; }
  bool contains_all(const std::vector<Perm> &gs) const;

  long identity_index() const;
  long exponent() const;

  std::vector<Perm> centralizer(const Perm &x) const;
  std::vector<Perm> centralizer_of_set(const std::vector<Perm> &xs) const;
  std::vector<Perm> normalizer_of_subgroup(const std::vector<Perm> &sub) const;

private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
};

/// Conjugacy class data: classes sorted by (rep order, size, least rep);
/// reps are the lexicographically least class members.
struct ConjClasses {
  std::vector<Perm> reps;
  std::vector<long> sizes;
  std::vector<long> centralizer_orders;
  std::vector<int> rep_orders;
  std::vector<int> class_of_elem; // indexed by element index in the group
  std::vector<int> inverse_map;
  std::vector<std::string> names; // ATLAS-style 1a, 2a, 3a, ...

  int count() const { return static_cast<int>(reps.size()); }
  int class_of(const PermGroup &G, const Perm &g) const;
  // class of reps[k]^n
  int power_class(const PermGroup &G, int k, long n) const;
  int index_of_name(const std::string &name) const; // -1 if missing
};

ConjClasses conjugacy_data(const PermGroup &G);

// (g_p, g_{p'}): commuting powers of g with p-power and p'-part orders.
std::pair<Perm, Perm> p_parts(const Perm &g, int p);

std::vector<int> p_regular_classes(const ConjClasses &cc, int p);

// Generators of one Sylow p-subgroup of the subgroup formed by `elements`
// (which must be closed under products); deterministic.
std::vector<Perm> sylow_p_subgroup(const std::vector<Perm> &elements, int p);

// Closure of a generator list inside an ambient (finite) context.
std::vector<Perm> subgroup_closure(const std::vector<Perm> &gens, int degree,
                                   long max_order = kDefaultOrderCap);

// Classes grouped by the class of their p-part; each section is a list of
// class indices, sections sorted by their p-part class index.
std::vector<std::vector<int>> p_section_partition(const PermGroup &G,
                                                  const ConjClasses &cc, int p);

bool is_prime(long n);
long p_part(long n, int p);     // largest power of p dividing n
int p_valuation(long n, int p); // exponent of that power

// Group file format: line 1 "degree N", then one generator per line in
// disjoint-cycle notation; '#' comments and blank lines ignored.
PermGroup parse_group_file(const std::string &path,
                           long max_order = kDefaultOrderCap);
PermGroup parse_group_text(const std::string &text,
                           long max_order = kDefaultOrderCap);

} // namespace charblock

#endif
