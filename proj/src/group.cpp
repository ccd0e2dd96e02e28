#include "relcay/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "relcay/error.hpp"

namespace relcay {

namespace detail {
struct SubgroupCache {
  std::once_flag once;
  std::vector<Mask> subgroups;
};
}  // namespace detail

namespace {

struct Factor {
  int order = 1;
  std::vector<Element> mul;
  std::vector<std::string> names;
};

std::string power_name(const std::string& base, int k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + std::to_string(k);
}

Factor cyclic(int n) {
  Factor f;
  f.order = n;
  f.mul.resize(n * n);
  for (int i = 0; i < n; ++i) {
    f.names.push_back(power_name("a", i));
    for (int j = 0; j < n; ++j) f.mul[i * n + j] = (i + j) % n;
  }
  return f;
}

// Rotations a^i are 0..n-1, reflections a^i b are n..2n-1.
Factor dihedral(int n) {
  Factor f;
  f.order = 2 * n;
  f.mul.resize(f.order * f.order);
  for (int i = 0; i < n; ++i) f.names.push_back(power_name("a", i));
  for (int i = 0; i < n; ++i) f.names.push_back(i == 0 ? "b" : power_name("a", i) + "b");
  for (int x = 0; x < f.order; ++x) {
    for (int y = 0; y < f.order; ++y) {
      const int i = x % n, s = x / n, j = y % n, t = y / n;
      // a^i b^s a^j b^t = a^(i + (-1)^s j) b^(s+t)
      const int rot = ((s ? i - j : i + j) % n + n) % n;
      f.mul[x * f.order + y] = rot + n * ((s + t) % 2);
    }
  }
  return f;
}

std::string cycle_name(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t i = start; !seen[i]; i = p[i]) {
      seen[i] = true;
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

// Permutations in lexicographic order of their image lists; xy applies x first.
Factor symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Factor f;
  f.order = static_cast<int>(perms.size());
  f.mul.resize(f.order * f.order);
  for (const auto& q : perms) f.names.push_back(cycle_name(q));
  for (int x = 0; x < f.order; ++x) {
    for (int y = 0; y < f.order; ++y) {
      std::vector<int> r(n);
      for (int i = 0; i < n; ++i) r[i] = perms[y][perms[x][i]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), r);
      f.mul[x * f.order + y] = static_cast<int>(it - perms.begin());
    }
  }
  return f;
}

// Elements (sign, unit) with units 1, i, j, k; index = 2*unit + sign.
Factor quaternion() {
  static constexpr std::array<std::array<int, 4>, 4> unit = {{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign = {{
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  Factor f;
  f.order = 8;
  f.mul.resize(64);
  const char* base[] = {"1", "i", "j", "k"};
  for (int x = 0; x < 8; ++x) {
    const int u = x / 2, s = x % 2;
    f.names.push_back(s == 0 ? std::string(base[u]) : (u == 0 ? "-1" : std::string("-") + base[u]));
    for (int y = 0; y < 8; ++y) {
      const int v = y / 2, t = y % 2;
      f.mul[x * 8 + y] = 2 * unit[u][v] + ((s + t + sign[u][v]) % 2);
    }
  }
  return f;
}

Factor elementary_abelian(int p, int k) {
  Factor f;
  f.order = 1;
  for (int i = 0; i < k; ++i) f.order *= p;
  f.mul.resize(f.order * f.order);
  auto digits = [&](int x) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i, x /= p) d[i] = x % p;
    return d;
  };
  for (int x = 0; x < f.order; ++x) {
    const auto dx = digits(x);
    std::string name;
    for (int i = 0; i < k; ++i) {
      if (dx[i] == 0) continue;
      name += "e" + std::to_string(i + 1);
      if (dx[i] > 1) name += "^" + std::to_string(dx[i]);
    }
    f.names.push_back(name.empty() ? "1" : name);
    for (int y = 0; y < f.order; ++y) {
      const auto dy = digits(y);
      int z = 0;
      for (int i = k - 1; i >= 0; --i) z = z * p + (dx[i] + dy[i]) % p;
      f.mul[x * f.order + y] = z;
    }
  }
  return f;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed group spec '" + std::string(whole) + "'");
  return std::stoi(std::string(s));
}

// Order of a term, computed before building it so oversize specs fail fast.
long long term_order(std::string_view term, std::string_view whole, int& a, int& b) {
  if (term.empty()) throw ParseError("empty term in group spec '" + std::string(whole) + "'");
  const char kind = term[0];
  const auto rest = term.substr(1);
  switch (kind) {
    case 'c':
      a = parse_int(rest, whole);
      if (a < 1) throw ParseError("cyclic order must be positive in '" + std::string(whole) + "'");
      return a;
    case 'd':
      a = parse_int(rest, whole);
      if (a < 1) throw ParseError("dihedral parameter must be positive in '" + std::string(whole) + "'");
      return 2LL * a;
    case 's': {
      a = parse_int(rest, whole);
      if (a < 1 || a > 5) throw ParseError("symmetric degree must be 1..5 in '" + std::string(whole) + "'");
      long long f = 1;
      for (int i = 2; i <= a; ++i) f *= i;
      return f;
    }
    case 'q':
      if (rest != "8") throw ParseError("only Q8 is supported, got '" + std::string(whole) + "'");
      return 8;
    case 'e': {
      const auto caret = rest.find('^');
      if (caret == std::string_view::npos)
        throw ParseError("elementary abelian term needs p^k in '" + std::string(whole) + "'");
      a = parse_int(rest.substr(0, caret), whole);
      b = parse_int(rest.substr(caret + 1), whole);
      if (!is_prime(a) || b < 1) throw ParseError("E<p>^<k> needs prime p and k >= 1 in '" + std::string(whole) + "'");
      long long o = 1;
      for (int i = 0; i < b && o <= kMaxSupportedOrder; ++i) o *= a;
      return o;
    }
    default:
      throw ParseError("unknown group term '" + std::string(term) + "' in '" + std::string(whole) + "'");
  }
}

Factor direct_product(const std::vector<Factor>& factors) {
  if (factors.size() == 1) return factors.front();
  Factor f;
  for (const auto& x : factors) f.order *= x.order;
  std::vector<std::vector<int>> coords(f.order);
  for (int x = 0; x < f.order; ++x) {
    int rest = x;
    coords[x].resize(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      coords[x][i] = rest % factors[i].order;
      rest /= factors[i].order;
    }
    std::string name = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) name += ',';
      name += factors[i].names[coords[x][i]];
    }
    f.names.push_back(name + ")");
  }
  f.mul.resize(f.order * f.order);
  for (int x = 0; x < f.order; ++x) {
    for (int y = 0; y < f.order; ++y) {
      int z = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& fi = factors[i];
        z = z * fi.order + fi.mul[coords[x][i] * fi.order + coords[y][i]];
      }
      f.mul[x * f.order + y] = z;
    }
  }
  return f;
}

}  // namespace

GroupTable::GroupTable(std::string spec, int order, std::vector<Element> mul,
                       std::vector<std::string> names)
    : spec_(std::move(spec)),
      order_(order),
      mul_(std::move(mul)),
      inv_(order, -1),
      names_(std::move(names)),
      cache_(std::make_shared<detail::SubgroupCache>()) {
  if (order_ < 1 || order_ > kMaxSupportedOrder)
    throw CapacityError("group order " + std::to_string(order_) + " outside 1.." +
                        std::to_string(kMaxSupportedOrder));
  if (static_cast<int>(mul_.size()) != order_ * order_ || static_cast<int>(names_.size()) != order_)
    throw InternalConsistencyError("table shape does not match order");
  for (int x = 0; x < order_; ++x) {
    if (this->mul(0, x) != x || this->mul(x, 0) != x)
      throw InternalConsistencyError("element 0 is not the identity in " + spec_);
    for (int y = 0; y < order_; ++y)
      if (this->mul(x, y) == 0) inv_[x] = y;
    if (inv_[x] < 0 || this->mul(inv_[x], x) != 0)
      throw InternalConsistencyError("element " + names_[x] + " has no inverse in " + spec_);
  }
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      for (int z = 0; z < order_; ++z)
        if (this->mul(this->mul(x, y), z) != this->mul(x, this->mul(y, z)))
          throw InternalConsistencyError("table of " + spec_ + " is not associative");
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InternalConsistencyError("element names of " + spec_ + " are not distinct");
}

std::optional<Element> GroupTable::find(std::string_view name) const {
  if (name == "1") return identity();
  for (int x = 0; x < order_; ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

Mask GroupTable::product(Mask a, Mask b) const {
  Mask out = 0;
  for_each_bit(a, [&](int x) {
    for_each_bit(b, [&](int y) { out |= bit(mul(x, y)); });
  });
  return out;
}

Mask GroupTable::left_translate(Element g, Mask a) const {
  Mask out = 0;
  for_each_bit(a, [&](int x) { out |= bit(mul(g, x)); });
  return out;
}

Mask GroupTable::right_translate(Mask a, Element g) const {
  Mask out = 0;
  for_each_bit(a, [&](int x) { out |= bit(mul(x, g)); });
  return out;
}

Mask GroupTable::inverse(Mask a) const {
  Mask out = 0;
  for_each_bit(a, [&](int x) { out |= bit(inv_[x]); });
  return out;
}

Mask GroupTable::closure(Mask generators) const {
  Mask result = bit(identity());
  Mask frontier = result;
  while (frontier) {
    const Mask next = product(frontier, generators) & ~result;
    result |= next;
    frontier = next;
  }
  return result;
}

bool GroupTable::is_subgroup(Mask a) const {
  return contains(a, identity()) && is_subset(product(a, a), a) && is_subset(inverse(a), a);
}

std::string GroupTable::format(Mask a) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(a, [&](int x) {
    if (!first) out += ',';
    first = false;
    out += names_[x];
  });
  return out + "}";
}

const std::vector<Mask>& GroupTable::subgroup_masks() const {
  std::call_once(cache_->once, [this] {
    // Grow known subgroups one element at a time; every subgroup is reached
    // through a chain <1> < <g1> < <g1,g2> < ... so the search is complete.
    struct Node {
      Mask members;
      Mask generators;
    };
    std::unordered_set<Mask> seen{bit(identity())};
    std::deque<Node> queue{{bit(identity()), 0}};
    while (!queue.empty()) {
      const Node node = queue.front();
      queue.pop_front();
      for_each_bit(all() & ~node.members, [&](int g) {
        const Mask gens = node.generators | bit(g);
        Mask result = node.members;
        Mask frontier = node.members;
        while (frontier) {
          const Mask next = product(frontier, gens) & ~result;
          result |= next;
          frontier = next;
        }
        if (seen.insert(result).second) queue.push_back({result, gens});
      });
    }
    std::vector<Mask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
      // Lexicographic member lists: the lowest differing element decides.
      const Mask diff = a ^ b;
      return contains(a, lowest(diff));
    });
    cache_->subgroups = std::move(out);
  });
  return cache_->subgroups;
}

ElementSet::ElementSet(const GroupTable& group, Mask members) : group_(&group), mask_(members) {
  if (!is_subset(members, group.all()))
    throw InternalConsistencyError("element index outside group " + group.spec());
}

ElementSet ElementSet::from_members(const GroupTable& group, const std::vector<Element>& members) {
  Mask m = 0;
  for (Element x : members) {
    if (x < 0 || x >= group.order())
      throw ParseError("element index " + std::to_string(x) + " outside group " + group.spec());
    m |= bit(x);
  }
  return ElementSet(group, m);
}

Subgroup::Subgroup(ElementSet set) : set_(std::move(set)) {
  if (!set_.group().is_subgroup(set_.mask()))
    throw NotASubgroupError(set_.to_string() + " is not a subgroup of " + set_.group().spec());
}

GroupTable make_group(std::string_view spec, int max_order) {
  max_order = std::min(max_order, kMaxSupportedOrder);
  std::string lower;
  for (char c : spec) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.empty()) throw ParseError("empty group spec");

  std::vector<std::string_view> terms;
  std::string_view rest = lower;
  while (true) {
    const auto x = rest.find('x');
    terms.push_back(rest.substr(0, x));
    if (x == std::string_view::npos) break;
    rest = rest.substr(x + 1);
  }

  struct Parsed { std::string_view term; int a = 0, b = 0; };
  std::vector<Parsed> parsed;
  long long total = 1;
  for (auto t : terms) {
    Parsed p{t};
    const long long o = term_order(t, spec, p.a, p.b);
    total *= o;
    if (total > max_order)
      throw CapacityError("group " + std::string(spec) + " exceeds maximum order " + std::to_string(max_order));
    parsed.push_back(p);
  }

  std::vector<Factor> factors;
  for (const auto& p : parsed) {
    switch (p.term[0]) {
      case 'c': factors.push_back(cyclic(p.a)); break;
      case 'd': factors.push_back(dihedral(p.a)); break;
      case 's': factors.push_back(symmetric(p.a)); break;
      case 'q': factors.push_back(quaternion()); break;
      default: factors.push_back(elementary_abelian(p.a, p.b)); break;
    }
  }
  Factor f = direct_product(factors);
  return GroupTable(std::string(spec), f.order, std::move(f.mul), std::move(f.names));
}

std::vector<Element> parse_elements(const GroupTable& group, std::string_view list) {
  std::vector<Element> out;
  if (list.size() >= 2 && list.front() == '{' && list.back() == '}') list = list.substr(1, list.size() - 2);
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      tokens.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in element list '" + std::string(list) + "'");
  if (!current.empty() || !tokens.empty()) tokens.push_back(current);
  for (const auto& t : tokens) {
    if (t.empty()) throw ParseError("empty element name in '" + std::string(list) + "'");
    const auto e = group.find(t);
    if (!e) throw ParseError("unknown element '" + t + "' in group " + group.spec());
    out.push_back(*e);
  }
  return out;
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  if (&a.group() != &b.group()) throw GroupMismatchError("product of sets from different groups");
  return ElementSet(a.group(), a.group().product(a.mask(), b.mask()));
}

Subgroup generated_subgroup(const ElementSet& x) {
  return Subgroup(ElementSet(x.group(), x.group().closure(x.mask())));
}

std::vector<Subgroup> enumerate_subgroups(const GroupTable& group) {
  std::vector<Subgroup> out;
  for (Mask m : group.subgroup_masks()) out.emplace_back(ElementSet(group, m));
  return out;
}

std::optional<int> width_of(const GroupTable& group, Mask x) {
  const Mask target = group.closure(x);
  Mask covered = bit(GroupTable::identity());
  Mask power = covered;
  std::unordered_set<Mask> powers_seen{power};
  for (int n = 0;; ++n) {
    if (covered == target) return n;
    power = group.product(power, x);
    covered |= power;
    if (!powers_seen.insert(power).second && covered != target) return std::nullopt;
  }
}

std::optional<int> width(const ElementSet& x) { return width_of(x.group(), x.mask()); }

int psi_of(const GroupTable& group, Mask x) {
  const Mask star = x | bit(GroupTable::identity());
  int best = 1;
  for (Mask k : group.subgroup_masks())
    if (is_subset(k, star)) best = std::max(best, popcount(k));
  return best;
}

int psi(const ElementSet& x) { return psi_of(x.group(), x.mask()); }

AbaWitness aba_decomposition(const GroupTable& group, Mask k) {
  std::vector<Mask> proper;
  for (Mask s : group.subgroup_masks())
    if (s != k && is_subset(s, k)) proper.push_back(s);
  std::vector<Mask> maximal;
  for (Mask s : proper) {
    const bool dominated = std::any_of(proper.begin(), proper.end(),
                                       [&](Mask t) { return t != s && is_subset(s, t); });
    if (!dominated) maximal.push_back(s);
  }
  // B is tried largest first so witnesses favour a big middle factor.
  std::vector<Mask> by_size_desc(maximal.rbegin(), maximal.rend());
  for (Mask a : maximal)
    for (Mask b : by_size_desc)
      if (group.product(group.product(a, b), a) == k) return {true, std::make_pair(a, b)};
  return {};
}

std::pair<bool, std::optional<std::pair<Subgroup, Subgroup>>> is_aba_group(const GroupTable& group) {
  const auto r = aba_decomposition(group, group.all());
  if (!r.is_aba) return {false, std::nullopt};
  return {true, std::make_pair(Subgroup(ElementSet(group, r.witness->first)),
                               Subgroup(ElementSet(group, r.witness->second)))};
}

}  // namespace relcay
