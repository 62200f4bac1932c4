#pragma once

// Low-index subgroup enumeration: backtrack over standardized partial coset
// tables, filling the first undefined entry, with relator-cycle deductions and
// pruning of tables that cannot be the minimal member of their conjugacy class.

#include "largeness/coset_table.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace largeness {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubgroupRecord {
  CosetTable table;
  std::vector<Word> schreier_generators;  // words in the parent's generators
  std::shared_ptr<GroupPresentation const> parent;

  int index() const noexcept { return table.index(); }
};

/// Coset representatives along the first-appearance spanning tree, and the
/// positive edges (coset, generator) that belong to the tree.
struct SpanningTree {
  std::vector<Word> representatives;
  std::vector<std::vector<bool>> tree_edge;  // tree_edge[c][g]
};

inline SpanningTree spanning_tree(CosetTable const& t) {
  int const n = t.index(), g = t.ngens();
  SpanningTree st;
  st.representatives.assign(static_cast<std::size_t>(n), Word());
  st.tree_edge.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(g), false));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    for (int x = 0; x < t.columns(); ++x) {
      int d = t.at(c, x);
      if (seen[static_cast<std::size_t>(d)]) continue;
      seen[static_cast<std::size_t>(d)] = true;
      order.push_back(d);
      int gen = x / 2, sign = (x % 2 == 0) ? 1 : -1;
      st.representatives[static_cast<std::size_t>(d)] =
          st.representatives[static_cast<std::size_t>(c)] * Word::letter(gen, sign);
      if (sign > 0) {
        st.tree_edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(gen)] = true;
      } else {
        st.tree_edge[static_cast<std::size_t>(d)][static_cast<std::size_t>(gen)] = true;
      }
    }
  }
  return st;
}

/// One generator rep(c) * g * rep(c g)^-1 per positive non-tree edge, in
/// (coset, generator) order: index * (ngens - 1) + 1 of them.
inline std::vector<Word> schreier_generators(CosetTable const& t) {
  auto st = spanning_tree(t);
  std::vector<Word> out;
  for (int c = 0; c < t.index(); ++c) {
    for (int g = 0; g < t.ngens(); ++g) {
      if (st.tree_edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)]) continue;
      int d = t.act(c, g, 1);
      out.push_back(st.representatives[static_cast<std::size_t>(c)] * Word::letter(g)
                    * st.representatives[static_cast<std::size_t>(d)].inverse());
    }
  }
  return out;
}

struct LowIndexOptions {
  bool normal_only = false;
  std::int64_t node_budget = 50'000'000;  // search nodes before giving up
};

struct LowIndexResult {
  std::vector<SubgroupRecord> subgroups;
  bool complete = true;  // false when the node budget ran out (results partial)
  std::int64_t nodes = 0;
};

namespace detail {

class LowIndexSearch {
 public:
  LowIndexSearch(GroupPresentation const& p, int max_index, LowIndexOptions const& opt)
      : ngens_(p.ngens()), cols_(2 * p.ngens()), max_index_(max_index), opt_(opt) {
    // Every cyclic rotation of every relator and of its inverse, as columns,
    // bucketed by first letter.
    cycles_.resize(static_cast<std::size_t>(cols_));
    for (auto const& r : p.relators()) {
      Word cr = cyclic_reduce(r);
      for (Word const& w : {cr, cr.inverse()}) {
        std::vector<int> cw;
        for (auto const& l : w.letters()) cw.push_back(column_of(l.gen, l.sign));
        if (cw.empty()) continue;
        for (std::size_t s = 0; s < cw.size(); ++s) {
          std::vector<int> rot(cw.begin() + static_cast<std::ptrdiff_t>(s), cw.end());
          rot.insert(rot.end(), cw.begin(), cw.begin() + static_cast<std::ptrdiff_t>(s));
          auto& bucket = cycles_[static_cast<std::size_t>(rot[0])];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(std::move(rot));
        }
      }
    }
    table_.assign(static_cast<std::size_t>(max_index * cols_), -1);
  }

  std::vector<CosetTable> run(std::int64_t& nodes, bool& complete) {
    count_ = 1;
    search();
    nodes = nodes_;
    complete = !out_of_budget_;
    return std::move(found_);
  }

 private:
  int& cell(int c, int x) { return table_[static_cast<std::size_t>(c * cols_ + x)]; }
  int cell(int c, int x) const { return table_[static_cast<std::size_t>(c * cols_ + x)]; }

  void assign(int c, int x, int d) {
    cell(c, x) = d;
    cell(d, inverse_column(x)) = c;
    trail_.push_back(c * cols_ + x);
    trail_.push_back(d * cols_ + inverse_column(x));
    queue_.push_back({c, x});
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  /// Processes the deduction queue; false on a contradiction.
  bool deduce() {
    while (!queue_.empty()) {
      auto [c, x] = queue_.back();
      queue_.pop_back();
      for (auto const& cyc : cycles_[static_cast<std::size_t>(x)]) {
        if (!scan_cycle(c, cyc)) {
          queue_.clear();
          return false;
        }
      }
    }
    return true;
  }

  bool scan_cycle(int c, std::vector<int> const& w) {
    int const len = static_cast<int>(w.size());
    int f = c, i = 0;
    while (i < len && cell(f, w[static_cast<std::size_t>(i)]) != -1) {
      f = cell(f, w[static_cast<std::size_t>(i)]);
      ++i;
    }
    if (i == len) return f == c;
    int b = c, j = len - 1;
    while (j >= i && cell(b, inverse_column(w[static_cast<std::size_t>(j)])) != -1) {
      b = cell(b, inverse_column(w[static_cast<std::size_t>(j)]));
      --j;
    }
    if (j < i) return f == b;
    if (i == j) {
      int x = w[static_cast<std::size_t>(i)];
      // f --x--> b would be forced; both slots must be free.
      if (cell(b, inverse_column(x)) != -1) return false;
      assign(f, x, b);
    }
    return true;
  }

  /// Compares the table seen from coset `base` with the current numbering,
  /// as far as both are determined. Returns -1 if the relabelled table is
  /// smaller, +1 if larger, 0 if undecided or equal so far.
  int compare_from(int base) const {
    std::vector<int> to_new(static_cast<std::size_t>(count_), -1), to_old;
    to_new[static_cast<std::size_t>(base)] = 0;
    to_old.push_back(base);
    for (int k = 0; k < count_; ++k) {
      if (k >= static_cast<int>(to_old.size())) return 0;
      int src = to_old[static_cast<std::size_t>(k)];
      for (int x = 0; x < cols_; ++x) {
        int a = cell(k, x);
        int bo = cell(src, x);
        if (bo == -1 || a == -1) return 0;
        if (to_new[static_cast<std::size_t>(bo)] == -1) {
          to_new[static_cast<std::size_t>(bo)] = static_cast<int>(to_old.size());
          to_old.push_back(bo);
        }
        int b = to_new[static_cast<std::size_t>(bo)];
        if (b < a) return -1;
        if (b > a) return 1;
      }
    }
    return 0;
  }

  bool acceptable_partial() const {
    for (int c = 1; c < count_; ++c) {
      int cmp = compare_from(c);
      if (cmp < 0) return false;
      if (opt_.normal_only && cmp > 0) return false;
    }
    return true;
  }

  void record_complete() {
    std::vector<int> cells(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(count_ * cols_));
    CosetTable t = CosetTable::from_cells(count_, ngens_, std::move(cells));
    for (int c = 1; c < count_; ++c) {
      auto s = standardize(t, c);
      if (s < t) return;
      if (opt_.normal_only && s != t) return;
    }
    found_.push_back(std::move(t));
  }

  void search() {
    if (out_of_budget_) return;
    if (++nodes_ > opt_.node_budget) {
      out_of_budget_ = true;
      return;
    }
    // First undefined entry in row-major order.
    int pos = -1;
    for (int k = 0; k < count_ * cols_; ++k) {
      if (table_[static_cast<std::size_t>(k)] == -1) {
        pos = k;
        break;
      }
    }
    if (pos < 0) {
      record_complete();
      return;
    }
    int c = pos / cols_, x = pos % cols_;
    int ix = inverse_column(x);
    auto try_value = [&](int d, bool fresh) {
      std::size_t mark = trail_.size();
      int saved = count_;
      if (fresh) ++count_;
      assign(c, x, d);
      if (deduce() && acceptable_partial()) search();
      undo_to(mark);
      count_ = saved;
    };
    for (int d = 0; d < count_; ++d) {
      if (cell(d, ix) == -1) try_value(d, false);
      if (out_of_budget_) return;
    }
    if (count_ < max_index_) try_value(count_, true);
  }

  int ngens_;
  int cols_;
  int max_index_;
  LowIndexOptions opt_;
  std::vector<std::vector<std::vector<int>>> cycles_;
  std::vector<int> table_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> queue_;
  std::vector<CosetTable> found_;
  int count_ = 0;
  std::int64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace detail

/// One record per conjugacy class of subgroups with index in
/// [min_index, max_index] (per normal subgroup in normal-only mode), sorted
/// by index and then by standardized table. Every class is the
/// lexicographically least standardized table among its conjugates.
inline LowIndexResult low_index_subgroups(GroupPresentation const& p, int min_index, int max_index,
                                          LowIndexOptions const& opt = {}) {
  if (min_index < 1 || max_index < min_index) throw std::invalid_argument("need 1 <= min-index <= max-index");
  LowIndexResult res;
  detail::LowIndexSearch search(p, max_index, opt);
  auto tables = search.run(res.nodes, res.complete);
  std::sort(tables.begin(), tables.end(), [](CosetTable const& a, CosetTable const& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a < b;
  });
  auto parent = std::make_shared<GroupPresentation const>(p);
  for (auto& t : tables) {
    if (t.index() < min_index) continue;
    SubgroupRecord rec{t, schreier_generators(t), parent};
    res.subgroups.push_back(std::move(rec));
  }
  return res;
}

}  // namespace largeness
