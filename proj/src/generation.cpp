#include "starsem/generation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "starsem/enumeration.hpp"

namespace starsem {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

GeneratorCatalog GeneratorCatalog::for_n(int n) {
  if (n < 3)
    throw std::invalid_argument("the named generators are defined for n >= 3, got n = " +
                                std::to_string(n));
  using PT = PartialTransformation;
  GeneratorCatalog g;
  g.n = n;

  const std::uint32_t outer = outer_mask(n);
  g.d = PT::partial_identity(n, outer);

  {
    std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 1}};
    for (int i = 3; i < n; ++i) pairs.emplace_back(i, i);
    g.a = PT::make(n, pairs);
  }
  {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n - 1; ++i) pairs.emplace_back(i, i + 1);
    pairs.emplace_back(n - 1, 1);
    g.b = PT::make(n, pairs);
  }
  {
    std::vector<std::pair<int, int>> pairs{{1, 1}, {2, 1}};
    for (int i = 3; i < n; ++i) pairs.emplace_back(i, i);
    g.e = PT::make(n, pairs);
  }
  g.f = PT::partial_identity(n, outer & ~2u);

  g.a0 = g.a.zeta_lift();
  g.b0 = g.b.zeta_lift();
  g.e0 = g.e.zeta_lift();
  g.f0 = g.f.zeta_lift();

  {
    std::vector<std::pair<int, int>> pairs{{1, 0}};
    for (int i = 2; i < n; ++i) pairs.emplace_back(i, i);
    g.c = PT::make(n, pairs);
  }
  g.c0 = g.c.zeta_lift();

  {
    std::vector<std::pair<int, int>> pairs{{0, 1}};
    for (int i = 1; i < n; ++i) pairs.emplace_back(i, 0);
    g.z = PT::make(n, pairs);
  }
  g.z0 = g.z.zeta_lift();

  g.e1 = PT::partial_identity(n, full_mask(n) & ~(1u << (n - 1)));
  g.z1 = PT::make(n, {{0, 1}, {1, 0}});
  return g;
}

ClosureResult closure(int n, std::span<const PartialTransformation> generators,
                      const Caps& caps) {
  for (const auto& g : generators)
    if (g.n() != n)
      throw std::invalid_argument("generator '" + g.to_string() +
                                  "' does not live on " + std::to_string(n) +
                                  " vertices");
  ClosureResult result;
  std::unordered_set<PartialTransformation> seen;
  std::vector<PartialTransformation> frontier{PartialTransformation::identity(n)};
  seen.insert(frontier.front());

  while (!frontier.empty()) {
    std::vector<PartialTransformation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        PartialTransformation p = compose(x, g);
        ++result.products_evaluated;
        if (seen.insert(p).second) {
          next.push_back(p);
          if (seen.size() > caps.closure_elements)
            throw closure_cap_error(
                "closure exceeded the element bound of " +
                    std::to_string(caps.closure_elements),
                seen.size());
        }
      }
    }
    if (!next.empty()) ++result.depth;
    frontier = std::move(next);
  }

  result.elements.assign(seen.begin(), seen.end());
  std::sort(result.elements.begin(), result.elements.end(), codec_less);
  return result;
}

std::vector<PartialTransformation> named_generating_set(Family family, int n) {
  const GeneratorCatalog g = GeneratorCatalog::for_n(n);  // throws for n < 3
  if (n == 3) {
    switch (family) {
      case Family::PsEnd: return {g.a0, g.f0, g.d, g.z};
      case Family::PswEnd: return {g.a0, g.f0, g.d, g.z, g.z0};
      case Family::PEnd: return {g.a0, g.f0, g.d, g.z, g.c};
      case Family::PwEnd: return {g.a0, g.f0, g.d, g.z, g.c0};
      case Family::PAut: return {g.a0, g.d, g.z1};
      case Family::IEnd: return {g.a0, g.d, g.c, g.z1};
      default: break;
    }
  } else {
    switch (family) {
      case Family::PsEnd: return {g.a0, g.b0, g.e0, g.f0, g.d, g.z};
      case Family::PswEnd: return {g.a0, g.b0, g.e0, g.f0, g.d, g.z, g.z0};
      case Family::PEnd: return {g.a0, g.b0, g.e0, g.f0, g.c, g.d, g.z};
      case Family::PwEnd: return {g.a0, g.b0, g.e0, g.f0, g.c0, g.d, g.z};
      case Family::PAut: return {g.a0, g.b0, g.e1, g.d, g.z1};
      case Family::IEnd: return {g.a0, g.b0, g.e1, g.c, g.d, g.z1};
      default: break;
    }
  }
  throw std::invalid_argument("no named generating set for " +
                              std::string(family_name(family)));
}

GeneratorCheck verify_generators(Family family, int n, const Caps& caps) {
  GeneratorCheck check;
  check.family = family;
  check.n = n;
  check.generators = named_generating_set(family, n);
  check.expected_size = cardinality(family, n);

  check.generators_member = true;
  for (const auto& g : check.generators)
    if (!is_member(family, g)) check.generators_member = false;

  ClosureResult cl = closure(n, check.generators, caps);
  check.closure_size = cl.elements.size();
  check.size_matches =
      (mpz_class(static_cast<unsigned long>(check.closure_size)) ==
       check.expected_size);

  check.closure_within_family = true;
  for (const auto& x : cl.elements)
    if (!is_member(family, x)) check.closure_within_family = false;

  return check;
}

namespace {

// Closure of a subset over the precomputed multiplication table, as element
// indices. Returns true when everything is reached.
class TableClosure {
public:
  TableClosure(const std::vector<std::int32_t>& table, std::size_t m,
               int identity_index)
      : table_(table), m_(m), identity_(identity_index),
        seen_((m + 63) / 64), queue_(m) {}

  bool generates_all(const int* gens, int k) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::size_t count = 0;
    std::size_t head = 0, tail = 0;
    auto push = [&](int v) {
      auto w = static_cast<std::size_t>(v);
      if ((seen_[w / 64] >> (w % 64)) & 1ull) return;
      seen_[w / 64] |= 1ull << (w % 64);
      ++count;
      queue_[tail++] = v;
    };
    push(identity_);
    while (head < tail) {
      int x = queue_[head++];
      const std::int32_t* row = table_.data() + static_cast<std::size_t>(x) * m_;
      for (int i = 0; i < k; ++i) push(row[gens[i]]);
    }
    return count == m_;
  }

private:
  const std::vector<std::int32_t>& table_;
  std::size_t m_;
  int identity_;
  std::vector<std::uint64_t> seen_;
  std::vector<int> queue_;
};

struct IndexedFamily {
  std::vector<PartialTransformation> elems;
  std::vector<std::int32_t> table;
  int identity_index = -1;
};

IndexedFamily index_family(Family family, int n, const Caps& caps) {
  IndexedFamily fam;
  fam.elems = enumerate_family(family, n, caps);
  std::unordered_map<PartialTransformation, int> index;
  index.reserve(2 * fam.elems.size());
  for (std::size_t i = 0; i < fam.elems.size(); ++i)
    index.emplace(fam.elems[i], static_cast<int>(i));
  const std::size_t m = fam.elems.size();
  fam.table.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      fam.table[i * m + j] = index.at(compose(fam.elems[i], fam.elems[j]));
  fam.identity_index = index.at(PartialTransformation::identity(n));
  return fam;
}

// Lexicographic position (1-based) of a k-combination of {0..m-1}.
unsigned long long combination_rank(int m, const std::vector<int>& combo) {
  mpz_class before = 0;
  const int k = static_cast<int>(combo.size());
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < combo[i]; ++v)
      before += binom(static_cast<unsigned long>(m - 1 - v),
                      static_cast<unsigned long>(k - 1 - i));
    prev = combo[i];
  }
  before += 1;
  return before.get_ui();
}

}  // namespace

RankSearchResult rank_search(Family family, int n, int k, const Caps& caps,
                             int jobs) {
  if (k < 1) throw std::invalid_argument("subset size must be at least 1");
  RankSearchResult result;
  result.family = family;
  result.n = n;
  result.k = k;

  IndexedFamily fam = index_family(family, n, caps);
  const int m = static_cast<int>(fam.elems.size());
  result.family_size = fam.elems.size();

  mpz_class space = binom(static_cast<unsigned long>(m),
                          static_cast<unsigned long>(std::min(k, m)));
  if (k > m) space = 0;
  if (space > mpz_class(static_cast<unsigned long>(caps.rank_subsets)))
    throw std::invalid_argument(
        "the " + std::to_string(k) + "-subset space of " +
        std::string(family_name(family)) + " has " + space.get_str() +
        " elements, over the bound of " + std::to_string(caps.rank_subsets));
  if (k > m) {
    result.subsets_examined = 0;
    return result;
  }

  // Partition the subset space by first element; threads claim first
  // elements dynamically and scan the remaining combinations in
  // lexicographic order, so the merged witness is the global first.
  std::atomic<int> next_first{0};
  std::atomic<int> best_first{m};
  std::vector<std::vector<int>> found(static_cast<std::size_t>(m));

  auto worker = [&]() {
    TableClosure cl(fam.table, static_cast<std::size_t>(m), fam.identity_index);
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (;;) {
      int first = next_first.fetch_add(1);
      if (first > m - k) break;
      if (first > best_first.load()) continue;
      for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = first + i;
      for (;;) {
        if (cl.generates_all(combo.data(), k)) {
          found[static_cast<std::size_t>(first)] = combo;
          int cur = best_first.load();
          while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
          }
          break;
        }
        // next combination with the same first element
        int i = k - 1;
        while (i > 0 && combo[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i == 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  };

  int thread_count = std::max(1, jobs);
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (int first = 0; first <= m - k; ++first) {
    if (!found[static_cast<std::size_t>(first)].empty()) {
      const auto& combo = found[static_cast<std::size_t>(first)];
      std::vector<PartialTransformation> witness;
      witness.reserve(combo.size());
      for (int idx : combo)
        witness.push_back(fam.elems[static_cast<std::size_t>(idx)]);
      result.witness = std::move(witness);
      result.subsets_examined = combination_rank(m, combo);
      return result;
    }
  }
  result.subsets_examined = space.get_ui();
  return result;
}

RankCertificate certify_rank(Family family, int n, const Caps& caps, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  RankCertificate cert;
  cert.family = family;
  cert.n = n;
  for (int k = 1;; ++k) {
    RankSearchResult level = rank_search(family, n, k, caps, jobs);
    cert.subsets_examined += level.subsets_examined;
    const bool found = level.witness.has_value();
    cert.levels.push_back(std::move(level));
    if (found) {
      cert.rank = k;
      cert.witness = cert.levels.back().witness;
      break;
    }
  }
  cert.runtime_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return cert;
}

std::vector<FactorizationViolation> factorization_violations(
    Family ambient, int n, std::span<const PartialTransformation> targets,
    Family submonoid, const Caps& caps) {
  std::unordered_set<PartialTransformation> target_set(targets.begin(),
                                                       targets.end());
  const auto elems = enumerate_family(ambient, n, caps);
  std::vector<char> inside(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    inside[i] = is_member(submonoid, elems[i]) ? 1 : 0;

  std::vector<FactorizationViolation> violations;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (inside[i] && inside[j]) continue;
      PartialTransformation p = compose(elems[i], elems[j]);
      if (target_set.count(p))
        violations.push_back({elems[i], elems[j], p});
    }
  return violations;
}

}  // namespace starsem
