#include "axial/fpgrp/coset.hpp"

#include <algorithm>
#include <set>

namespace axial {

namespace {

constexpr std::int32_t kNone = -1;

// Columns: generator i has column 2i, its inverse 2i+1.
int column_of(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& sub, const CosetOptions& opts)
      : ngens_(p.generators.size()), ncols_(2 * ngens_), opts_(opts) {
    for (const auto& r : p.relators) rels_.push_back(to_columns(r));
    for (const auto& w : sub) {
      auto c = to_columns(free_reduce(w));
      if (!c.empty()) subs_.push_back(std::move(c));
    }
    // Felsch scans every cyclic conjugate of every relator and its inverse,
    // indexed by first column.
    by_first_.assign(ncols_, {});
    std::set<std::vector<int>> seen;
    for (const auto& r : rels_) {
      for (const auto& base : {r, invert(r)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
          std::vector<int> rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
          if (seen.insert(rot).second) by_first_[static_cast<std::size_t>(rot.front())].push_back(rot);
        }
      }
    }
    new_coset();
  }

  CosetTable run() {
    for (const auto& w : subs_) scan_and_fill(0, w);
    process_deductions();
    if (opts_.strategy == CosetStrategy::HLT)
      run_hlt();
    else
      run_felsch();
    return finish();
  }

 private:
  std::vector<int> to_columns(const Word& w) const {
    std::vector<int> out;
    for (int a : w) {
      if (a == 0 || static_cast<std::size_t>(std::abs(a)) > ngens_)
        throw std::invalid_argument("coset_enumerate: word uses an undeclared generator");
      out.push_back(column_of(a));
    }
    return out;
  }
  static std::vector<int> invert(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& c : out) c ^= 1;
    return out;
  }

  std::int32_t& at(std::int32_t c, int col) {
    return table_[static_cast<std::size_t>(c) * ncols_ + static_cast<std::size_t>(col)];
  }

  std::int32_t new_coset() {
    if (fwd_.size() >= opts_.max_cosets)
      throw Inconclusive("coset enumeration: cap of " + std::to_string(opts_.max_cosets) +
                         " cosets exceeded");
    auto c = static_cast<std::int32_t>(fwd_.size());
    fwd_.push_back(c);
    table_.resize(table_.size() + ncols_, kNone);
    next_.push_back(kNone);
    prev_.push_back(last_);
    if (last_ != kNone) next_[static_cast<std::size_t>(last_)] = c;
    last_ = c;
    ++live_;
    return c;
  }

  bool alive(std::int32_t c) const { return fwd_[static_cast<std::size_t>(c)] == c; }

  void define(std::int32_t c, int col) {
    std::int32_t d = new_coset();
    at(c, col) = d;
    at(d, col ^ 1) = c;
    deductions_.push_back({c, col});
  }

  void scan_and_fill(std::int32_t c, const std::vector<int>& w) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != kNone) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) != kNone)
        b = at(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        int col = w[static_cast<std::size_t>(i)];
        at(f, col) = b;
        at(b, col ^ 1) = f;
        deductions_.push_back({f, col});
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  // Scan without defining new cosets; deduce when exactly one gap remains.
  void scan(std::int32_t c, const std::vector<int>& w) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != kNone) f = at(f, w[static_cast<std::size_t>(i++)]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) != kNone)
      b = at(b, w[static_cast<std::size_t>(j--)] ^ 1);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      int col = w[static_cast<std::size_t>(i)];
      at(f, col) = b;
      at(b, col ^ 1) = f;
      deductions_.push_back({f, col});
    }
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (fwd_[static_cast<std::size_t>(r)] != r) r = fwd_[static_cast<std::size_t>(r)];
    while (fwd_[static_cast<std::size_t>(c)] != r) {
      std::int32_t n = fwd_[static_cast<std::size_t>(c)];
      fwd_[static_cast<std::size_t>(c)] = r;
      c = n;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    fwd_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void unlink(std::int32_t c) {
    auto p = prev_[static_cast<std::size_t>(c)], n = next_[static_cast<std::size_t>(c)];
    if (p != kNone) next_[static_cast<std::size_t>(p)] = n;
    if (n != kNone) prev_[static_cast<std::size_t>(n)] = p;
    if (last_ == c) last_ = p;
    --live_;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::int32_t g = queue[qi];
      unlink(g);
      for (int x = 0; x < static_cast<int>(ncols_); ++x) {
        std::int32_t d = at(g, x);
        if (d == kNone) continue;
        if (at(d, x ^ 1) == g) at(d, x ^ 1) = kNone;
        std::int32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1) != kNone) {
          merge(mu, at(nu, x ^ 1), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& w : by_first_[static_cast<std::size_t>(col)]) {
        if (!alive(c)) break;
        scan(c, w);
      }
      if (!alive(c)) continue;
      std::int32_t d = at(c, col);
      if (d == kNone || !alive(d)) continue;
      for (const auto& w : by_first_[static_cast<std::size_t>(col ^ 1)]) {
        if (!alive(d)) break;
        scan(d, w);
      }
    }
  }

  void run_felsch() {
    std::int32_t c = 0;
    while (c != kNone) {
      bool defined = false;
      for (int x = 0; x < static_cast<int>(ncols_) && alive(c); ++x) {
        if (at(c, x) != kNone) continue;
        define(c, x);
        process_deductions();
        defined = true;
        break;
      }
      if (!alive(c) || !defined) c = next_live(c);
    }
    // Felsch closes with every relator scanned through deductions; a final
    // HLT-style pass confirms it (and repairs nothing in a correct run).
    run_hlt();
  }

  std::int32_t next_live(std::int32_t c) {
    // The live list is ordered by creation; a dead coset resumes from its representative.
    if (!alive(c)) c = rep(c);
    return next_[static_cast<std::size_t>(c)];
  }

  void run_hlt() {
    for (std::int32_t c = 0; c != kNone;) {
      for (const auto& w : rels_) {
        if (!alive(c)) break;
        scan_and_fill(c, w);
      }
      if (alive(c))
        for (int x = 0; x < static_cast<int>(ncols_); ++x)
          if (at(c, x) == kNone) define(c, x);
      deductions_.clear();
      c = next_live(c);
    }
  }

  CosetTable finish() {
    // Renumber live cosets breadth-first from the subgroup coset.
    std::vector<std::int32_t> number(fwd_.size(), kNone), order{0};
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int x = 0; x < static_cast<int>(ncols_); ++x) {
        std::int32_t d = at(order[i], x);
        if (d == kNone || !alive(d)) throw std::logic_error("coset_enumerate: incomplete table");
        if (number[static_cast<std::size_t>(d)] == kNone) {
          number[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    CosetTable t;
    t.index = order.size();
    t.num_generators = ngens_;
    t.image.assign(ngens_, std::vector<std::uint32_t>(t.index));
    t.inverse.assign(ngens_, std::vector<std::uint32_t>(t.index));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t g = 0; g < ngens_; ++g) {
        t.image[g][i] = static_cast<std::uint32_t>(number[static_cast<std::size_t>(at(order[i], static_cast<int>(2 * g)))]);
        t.inverse[g][i] =
            static_cast<std::uint32_t>(number[static_cast<std::size_t>(at(order[i], static_cast<int>(2 * g + 1)))]);
      }
    t.subgroup_trivial = subs_.empty();
    t.cosets_defined = fwd_.size();
    return t;
  }

  std::size_t ngens_, ncols_;
  CosetOptions opts_;
  std::vector<std::vector<int>> rels_, subs_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<std::int32_t> table_, fwd_, next_, prev_;
  std::int32_t last_ = kNone;
  std::size_t live_ = 0;
  std::vector<std::pair<std::int32_t, int>> deductions_;
};

}  // namespace

std::uint32_t CosetTable::trace(std::uint32_t c, const Word& w) const {
  for (int a : w) c = a > 0 ? image[static_cast<std::size_t>(a - 1)][c] : inverse[static_cast<std::size_t>(-a - 1)][c];
  return c;
}

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_words,
                           const CosetOptions& opts) {
  return Enumerator(p, subgroup_words, opts).run();
}

PermGroup perm_rep(const CosetTable& t) {
  if (t.index == 0) throw std::invalid_argument("perm_rep: incomplete table");
  std::vector<Perm> gens;
  for (const auto& col : t.image) gens.emplace_back(std::vector<Point>(col.begin(), col.end()));
  if (t.subgroup_trivial) return PermGroup(t.index, std::move(gens), t.index);
  return PermGroup(t.index, std::move(gens));
}

Perm evaluate(const Word& w, const PermGroup& rep) {
  Perm p = rep.identity();
  for (int a : w) {
    const Perm& g = rep.generators().at(static_cast<std::size_t>(std::abs(a) - 1));
    p = p * (a > 0 ? g : g.inverse());
  }
  return p;
}

}  // namespace axial
