#pragma once

#include <cstddef>
#include <vector>

#include "sudogen/pair_set.hpp"

namespace sudogen {

// Search state for building an n^2-tuple of pairwise disjoint pair
// matrices: one candidate set per (layer, row, column).  Cells are indexed
// layer-major, then row, then column, which is also the order the in-order
// search decides them in.
//
// Every bit an assignment clears is pushed on a trail, so undoing to a mark
// restores the exact previous state; comparing against a shadow copy is a
// valid test for that.  Candidate sets only ever shrink between a mark and
// its undo.
class CandidateGrid {
 public:
  explicit CandidateGrid(int n);

  int order() const { return n_; }
  int layer_count() const { return n_ * n_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }

  // all 1-based
  int cell_index(int layer, int i, int j) const {
    return ((layer - 1) * n_ + (i - 1)) * n_ + (j - 1);
  }

  const PairSet& candidates(int cell) const { return cells_[cell]; }
  const PairSet& candidates(int layer, int i, int j) const {
    return cells_[cell_index(layer, i, j)];
  }

  bool decided(int cell) const { return decided_[cell] != 0; }
  int decided_count() const { return decided_count_; }
  // next undecided cell in layer/row/column order, == cell_count() when the
  // grid is complete; only meaningful while all decisions go through
  // assign_next
  int cursor() const { return decided_count_; }

  struct Mark {
    std::size_t trail = 0;
  };
  Mark mark() const { return {trail_.size()}; }

  // Decides the cursor cell: collapses its set to {p}, then removes the
  // conflicts p creates in cells that come later in the decision order (p
  // itself from the same position of later layers; first-component clashes
  // to the right in this layer's row; second-component clashes below in
  // this layer's column).  Cells before the cursor are already decided and
  // cannot conflict, so touching only the forward ones keeps the work per
  // decision linear.
  //
  // Returns false as soon as some touched set becomes empty; the caller is
  // expected to undo back to its mark.  Throws std::logic_error when p is
  // not among the cell's candidates.
  bool assign_next(Pair p);
  // same, with the cursor position spelled out; throws std::logic_error
  // when (layer, i, j) is not the cursor cell
  bool assign(int layer, int i, int j, Pair p);

  // Decides an arbitrary undecided cell for searches that pick cells by
  // candidate count instead of by position.  Conflicts are removed from
  // every peer cell, before or after, since the decision order is no
  // longer tied to the layout.
  bool assign_at_cell(int cell, Pair p);

  void undo(Mark m);

  struct Removal {
    int cell = 0;
    Pair pair;

    friend bool operator==(const Removal&, const Removal&) = default;
  };
  // candidate removals logged after the mark, oldest first
  std::vector<Removal> removals_since(Mark m) const;

  friend bool operator==(const CandidateGrid&, const CandidateGrid&) = default;

 private:
  // A trail entry is either one removed candidate or the record that a
  // cell was decided (pair holds the choice, removal == false).
  struct TrailEntry {
    int cell;
    Pair pair;
    bool removal;

    friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
  };

  bool remove_candidate(int cell, Pair p);
  bool collapse_cell(int cell, Pair p);
  bool propagate_forward(int layer, int i, int j, Pair p);
  bool propagate_all_peers(int layer, int i, int j, Pair p);

  int n_;
  std::vector<PairSet> cells_;
  std::vector<char> decided_;
  int decided_count_ = 0;
  std::vector<TrailEntry> trail_;
};

}  // namespace sudogen
