#include "charblock/perm.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "charblock/cyclo.hpp"

namespace charblock {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || static_cast<size_t>(x) >= img_.size() ||
        seen[static_cast<size_t>(x)])
      throw std::runtime_error("Perm: image list is not a bijection");
    seen[static_cast<size_t>(x)] = true;
  }
}

Perm Perm::from_cycles(int degree, const std::string &cycles) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i)
    img[static_cast<size_t>(i)] = i;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < cycles.size() &&
           std::isspace(static_cast<unsigned char>(cycles[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(')
      throw std::runtime_error("cycle parse error in \"" + cycles + "\"");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      size_t start = pos;
      while (pos < cycles.size() &&
             std::isdigit(static_cast<unsigned char>(cycles[pos])))
        ++pos;
      if (pos == start)
        throw std::runtime_error("cycle parse error in \"" + cycles + "\"");
      int pt = std::stoi(cycles.substr(start, pos - start));
      if (pt < 1 || pt > degree)
        throw std::runtime_error("cycle point out of range in \"" + cycles +
                                 "\"");
      cyc.push_back(pt - 1);
      skip_ws();
      if (pos < cycles.size() && (cycles[pos] == ',' || cycles[pos] == ' ')) {
        ++pos;
        continue;
      }
      if (pos < cycles.size() && cycles[pos] == ')') {
        ++pos;
        break;
      }
      throw std::runtime_error("cycle parse error in \"" + cycles + "\"");
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (img[static_cast<size_t>(from)] != from)
        throw std::runtime_error("cycles are not disjoint in \"" + cycles +
                                 "\"");
      img[static_cast<size_t>(from)] = to;
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm &o) const {
  if (degree() != o.degree())
    throw std::runtime_error("Perm: degree mismatch");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    img[i] = o.img_[static_cast<size_t>(img_[i])];
  Perm r(static_cast<int>(img_.size()));
  r.img_ = std::move(img);
  return r;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (size_t i = 0; i < img_.size(); ++i)
    r.img_[static_cast<size_t>(img_[i])] = static_cast<int>(i);
  return r;
}

Perm Perm::conjugated_by(const Perm &g) const {
  return g.inverse() * (*this) * g;
}

Perm Perm::power(long n) const {
  int ord = order();
  n %= ord;
  if (n < 0)
    n += ord;
  Perm r(degree());
  Perm base = *this;
  while (n > 0) {
    if (n & 1)
      r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i))
      return false;
  return true;
}

int Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  long ord = 1;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    int x = static_cast<int>(i);
    do {
      seen[static_cast<size_t>(x)] = true;
      x = img_[static_cast<size_t>(x)];
      ++len;
    } while (x != static_cast<int>(i));
    ord = std::lcm<long>(ord, len);
  }
  return static_cast<int>(ord);
}

std::string Perm::to_cycle_string() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i))
      continue;
    os << '(';
    int x = static_cast<int>(i);
    bool first = true;
    do {
      if (!first)
        os << ',';
      os << (x + 1);
      seen[static_cast<size_t>(x)] = true;
      x = img_[static_cast<size_t>(x)];
      first = false;
    } while (x != static_cast<int>(i));
    os << ')';
    any = true;
  }
  if (!any)
    return "()";
  return os.str();
}

PermGroup PermGroup::generated(std::vector<Perm> generators, long max_order) {
  if (generators.empty())
    throw std::runtime_error("PermGroup: generator list is empty");
  int degree = generators[0].degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw std::runtime_error("PermGroup: generator degree mismatch");

  std::set<Perm> elems;
  std::vector<Perm> frontier;
  Perm id(degree);
  elems.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto &x : frontier) {
      for (const auto &g : generators) {
        Perm y = x * g;
        if (elems.insert(y).second) {
          if (static_cast<long>(elems.size()) > max_order)
            throw std::runtime_error("group too large");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = std::move(generators);
  G.elems_.assign(elems.begin(), elems.end());
  return G;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements,
                                   std::vector<Perm> generators) {
  if (elements.empty())
    throw std::runtime_error("PermGroup: element list is empty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  PermGroup G;
  G.degree_ = elements[0].degree();
  G.elems_ = std::move(elements);
  G.gens_ = generators.empty() ? G.elems_ : std::move(generators);
  return G;
}

long PermGroup::index_of(const Perm &g) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
  if (it == elems_.end() || !(*it == g))
    return -1;
  return it - elems_.begin();
}

bool PermGroup::contains_all(const std::vector<Perm> &gs) const {
  for (const auto &g : gs)
    if (!contains(g))
      return false;
  return true;
}

long PermGroup::identity_index() const {
  long i = index_of(Perm(degree_));
  if (i < 0)
    throw std::runtime_error("PermGroup: identity missing");
  return i;
}

long PermGroup::exponent() const {
  long e = 1;
  for (const auto &g : elems_)
    e = std::lcm<long>(e, g.order());
  return e;
}

std::vector<Perm> PermGroup::centralizer(const Perm &x) const {
  std::vector<Perm> c;
  for (const auto &g : elems_)
    if (g * x == x * g)
      c.push_back(g);
  return c;
}

std::vector<Perm> PermGroup::centralizer_of_set(
    const std::vector<Perm> &xs) const {
  std::vector<Perm> c;
  for (const auto &g : elems_) {
    bool ok = true;
    for (const auto &x : xs)
      if (!(g * x == x * g)) {
        ok = false;
        break;
      }
    if (ok)
      c.push_back(g);
  }
  return c;
}

std::vector<Perm> PermGroup::normalizer_of_subgroup(
    const std::vector<Perm> &sub) const {
  std::set<Perm> subset(sub.begin(), sub.end());
  std::vector<Perm> n;
  for (const auto &g : elems_) {
    bool ok = true;
    for (const auto &s : sub)
      if (!subset.count(s.conjugated_by(g))) {
        ok = false;
        break;
      }
    if (ok)
      n.push_back(g);
  }
  return n;
}

int ConjClasses::class_of(const PermGroup &G, const Perm &g) const {
  long i = G.index_of(g);
  if (i < 0)
    throw std::runtime_error("class_of: element not in group");
  return class_of_elem[static_cast<size_t>(i)];
}

int ConjClasses::power_class(const PermGroup &G, int k, long n) const {
  return class_of(G, reps[static_cast<size_t>(k)].power(n));
}

int ConjClasses::index_of_name(const std::string &name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name)
      return static_cast<int>(i);
  return -1;
}

ConjClasses conjugacy_data(const PermGroup &G) {
  long n = G.order();
  std::vector<int> cls(static_cast<size_t>(n), -1);
  struct RawClass {
    long rep_idx; // least member
    long size;
    int order;
  };
  std::vector<RawClass> raw;
  for (long i = 0; i < n; ++i) {
    if (cls[static_cast<size_t>(i)] >= 0)
      continue;
    int id = static_cast<int>(raw.size());
    // orbit of element i under conjugation by generators
    std::vector<long> frontier{i};
    cls[static_cast<size_t>(i)] = id;
    long size = 0;
    while (!frontier.empty()) {
      std::vector<long> next;
      for (long e : frontier) {
        ++size;
        const Perm &x = G.element(e);
        for (const auto &g : G.generators()) {
          long j = G.index_of(x.conjugated_by(g));
          if (cls[static_cast<size_t>(j)] < 0) {
            cls[static_cast<size_t>(j)] = id;
            next.push_back(j);
          }
        }
      }
      frontier = std::move(next);
    }
    raw.push_back({i, size, G.element(i).order()});
  }

  int k = static_cast<int>(raw.size());
  std::vector<int> perm(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    perm[static_cast<size_t>(i)] = i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto &ra = raw[static_cast<size_t>(a)];
    const auto &rb = raw[static_cast<size_t>(b)];
    if (ra.order != rb.order)
      return ra.order < rb.order;
    if (ra.size != rb.size)
      return ra.size < rb.size;
    return ra.rep_idx < rb.rep_idx; // elements are sorted, so index order
                                    // is lexicographic order
  });
  std::vector<int> new_id(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    new_id[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;

  ConjClasses cc;
  cc.reps.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto &r = raw[static_cast<size_t>(perm[static_cast<size_t>(i)])];
    cc.reps.push_back(G.element(r.rep_idx));
    cc.sizes.push_back(r.size);
    cc.centralizer_orders.push_back(n / r.size);
    cc.rep_orders.push_back(r.order);
  }
  cc.class_of_elem.resize(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    cc.class_of_elem[static_cast<size_t>(i)] =
        new_id[static_cast<size_t>(cls[static_cast<size_t>(i)])];
  cc.inverse_map.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    cc.inverse_map[static_cast<size_t>(i)] =
        cc.class_of(G, cc.reps[static_cast<size_t>(i)].inverse());
  // ATLAS-style names: letter counts per element order
  std::map<int, char> next_letter;
  cc.names.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    int ord = cc.rep_orders[static_cast<size_t>(i)];
    char &c = next_letter.try_emplace(ord, 'a').first->second;
    cc.names[static_cast<size_t>(i)] = std::to_string(ord) + c;
    ++c;
  }
  return cc;
}

std::pair<Perm, Perm> p_parts(const Perm &g, int p) {
  if (!is_prime(p))
    throw std::runtime_error("p_parts: p is not prime");
  long n = g.order();
  long pa = 1;
  long q = n;
  while (q % p == 0) {
    q /= p;
    pa *= p;
  }
  if (pa == 1)
    return {Perm(g.degree()), g};
  if (q == 1)
    return {g, Perm(g.degree())};
  // g_p = g^{q * (q^{-1} mod pa)}, g_{p'} = g^{pa * (pa^{-1} mod q)}
  long qinv = 0;
  for (long t = 0; t < pa; ++t)
    if ((q % pa) * t % pa == 1) {
      qinv = t;
      break;
    }
  long painv = 0;
  for (long t = 0; t < q; ++t)
    if ((pa % q) * t % q == 1) {
      painv = t;
      break;
    }
  Perm gp = g.power(q * qinv);
  Perm gpp = g.power(pa * painv);
  return {gp, gpp};
}

std::vector<int> p_regular_classes(const ConjClasses &cc, int p) {
  std::vector<int> out;
  for (int i = 0; i < cc.count(); ++i)
    if (cc.rep_orders[static_cast<size_t>(i)] % p != 0)
      out.push_back(i);
  return out;
}

std::vector<Perm> subgroup_closure(const std::vector<Perm> &gens, int degree,
                                   long max_order) {
  if (gens.empty())
    return {Perm(degree)};
  return PermGroup::generated(gens, max_order).elements();
}

std::vector<Perm> sylow_p_subgroup(const std::vector<Perm> &elements, int p) {
  if (!is_prime(p))
    throw std::runtime_error("sylow_p_subgroup: p is not prime");
  if (elements.empty())
    throw std::runtime_error("sylow_p_subgroup: empty subgroup");
  int degree = elements[0].degree();
  long target = p_part(static_cast<long>(elements.size()), p);
  std::vector<Perm> current{Perm(degree)};
  std::vector<Perm> gens;
  if (target == 1)
    return current;
  // p-elements in deterministic order
  std::vector<Perm> pelems;
  for (const auto &g : elements) {
    long o = g.order();
    if (o > 1 && p_part(o, p) == o)
      pelems.push_back(g);
  }
  std::sort(pelems.begin(), pelems.end());
  std::set<Perm> cur_set(current.begin(), current.end());
  while (static_cast<long>(current.size()) < target) {
    // a p-element of the normalizer outside the current subgroup always
    // exists while the subgroup is not yet Sylow
    bool extended = false;
    for (const auto &g : pelems) {
      if (cur_set.count(g))
        continue;
      bool normalizes = true;
      for (const auto &s : current)
        if (!cur_set.count(s.conjugated_by(g))) {
          normalizes = false;
          break;
        }
      if (!normalizes)
        continue;
      std::vector<Perm> ngens = gens;
      ngens.push_back(g);
      std::vector<Perm> next = subgroup_closure(ngens, degree);
      if (p_part(static_cast<long>(next.size()), p) !=
          static_cast<long>(next.size()))
        continue;
      gens = std::move(ngens);
      current = std::move(next);
      cur_set = std::set<Perm>(current.begin(), current.end());
      extended = true;
      break;
    }
    if (!extended)
      throw std::runtime_error("sylow_p_subgroup: extension failed");
  }
  if (gens.empty())
    gens.push_back(Perm(degree));
  return gens;
}

std::vector<std::vector<int>> p_section_partition(const PermGroup &G,
                                                  const ConjClasses &cc,
                                                  int p) {
  std::map<int, std::vector<int>> sections;
  for (int k = 0; k < cc.count(); ++k) {
    Perm gp = p_parts(cc.reps[static_cast<size_t>(k)], p).first;
    sections[cc.class_of(G, gp)].push_back(k);
  }
  std::vector<std::vector<int>> out;
  out.reserve(sections.size());
  for (auto &kv : sections)
    out.push_back(std::move(kv.second));
  return out;
}

bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

long p_part(long n, int p) {
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

int p_valuation(long n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

PermGroup parse_group_text(const std::string &text, long max_order) {
  std::istringstream in(text);
  std::string line;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
      continue;
    size_t b = line.find_last_not_of(" \t\r\n");
    line = line.substr(a, b - a + 1);
    if (degree < 0) {
      std::istringstream ls(line);
      std::string kw;
      ls >> kw >> degree;
      if (kw != "degree" || degree <= 0)
        throw std::runtime_error("group file: expected \"degree N\" first");
      continue;
    }
    gens.push_back(Perm::from_cycles(degree, line));
  }
  if (degree < 0)
    throw std::runtime_error("group file: missing degree line");
  if (gens.empty())
    gens.push_back(Perm(degree));
  return PermGroup::generated(std::move(gens), max_order);
}

PermGroup parse_group_file(const std::string &path, long max_order) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open group file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str(), max_order);
}

} // namespace charblock
