#include "sudogen/candidate_grid.hpp"

#include <stdexcept>
#include <string>

namespace sudogen {

CandidateGrid::CandidateGrid(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  const std::size_t cells = static_cast<std::size_t>(n) * n * n * n;
  cells_.assign(cells, PairSet::full(n));
  decided_.assign(cells, 0);
}

// false when the removal emptied the cell's set
bool CandidateGrid::remove_candidate(int cell, Pair p) {
  if (!cells_[cell].erase(p)) return true;
  trail_.push_back({cell, p, true});
  return !cells_[cell].empty();
}

bool CandidateGrid::collapse_cell(int cell, Pair keep) {
  for (Pair q : cells_[cell].to_vector())
    if (!(q == keep) && !remove_candidate(cell, q)) return false;
  return true;
}

bool CandidateGrid::propagate_forward(int layer, int i, int j, Pair p) {
  bool ok = true;
  // the same position of every later layer loses p
  for (int t = layer + 1; t <= layer_count() && ok; ++t)
    ok = remove_candidate(cell_index(t, i, j), p);
  // within this layer p.a is used up for row i and p.b for column j; the
  // cells on or before the cursor are already singletons that won, so only
  // the ones to the right and below need editing
  for (int c = j + 1; c <= n_ && ok; ++c) {
    const int cell = cell_index(layer, i, c);
    for (int b = 1; b <= n_ && ok; ++b)
      ok = remove_candidate(cell, {p.a, b});
  }
  for (int r = i + 1; r <= n_ && ok; ++r) {
    const int cell = cell_index(layer, r, j);
    for (int a = 1; a <= n_ && ok; ++a)
      ok = remove_candidate(cell, {a, p.b});
  }
  return ok;
}

bool CandidateGrid::propagate_all_peers(int layer, int i, int j, Pair p) {
  bool ok = true;
  for (int t = 1; t <= layer_count() && ok; ++t)
    if (t != layer) ok = remove_candidate(cell_index(t, i, j), p);
  for (int c = 1; c <= n_ && ok; ++c) {
    if (c == j) continue;
    const int cell = cell_index(layer, i, c);
    for (int b = 1; b <= n_ && ok; ++b)
      ok = remove_candidate(cell, {p.a, b});
  }
  for (int r = 1; r <= n_ && ok; ++r) {
    if (r == i) continue;
    const int cell = cell_index(layer, r, j);
    for (int a = 1; a <= n_ && ok; ++a)
      ok = remove_candidate(cell, {a, p.b});
  }
  return ok;
}

bool CandidateGrid::assign_next(Pair p) {
  const int cell = cursor();
  if (cell >= cell_count())
    throw std::logic_error("assign on a completed grid");
  if (!cells_[cell].contains(p))
    throw std::logic_error("pair <" + std::to_string(p.a) + "," +
                           std::to_string(p.b) +
                           "> is not a candidate of the cursor cell");
  trail_.push_back({cell, p, false});
  decided_[cell] = 1;
  ++decided_count_;
  const int layer = cell / (n_ * n_) + 1;
  const int i = (cell / n_) % n_ + 1;
  const int j = cell % n_ + 1;
  collapse_cell(cell, p);  // keeps p, cannot empty the set
  return propagate_forward(layer, i, j, p);
}

bool CandidateGrid::assign(int layer, int i, int j, Pair p) {
  if (layer < 1 || layer > layer_count() || i < 1 || i > n_ || j < 1 ||
      j > n_)
    throw std::logic_error("cell coordinates out of range");
  if (cell_index(layer, i, j) != cursor())
    throw std::logic_error("assign must target the cursor cell");
  return assign_next(p);
}

bool CandidateGrid::assign_at_cell(int cell, Pair p) {
  if (cell < 0 || cell >= cell_count())
    throw std::logic_error("cell index out of range");
  if (decided_[cell]) throw std::logic_error("cell is already decided");
  if (!cells_[cell].contains(p))
    throw std::logic_error("pair <" + std::to_string(p.a) + "," +
                           std::to_string(p.b) +
                           "> is not a candidate of the cell");
  trail_.push_back({cell, p, false});
  decided_[cell] = 1;
  ++decided_count_;
  const int layer = cell / (n_ * n_) + 1;
  const int i = (cell / n_) % n_ + 1;
  const int j = cell % n_ + 1;
  collapse_cell(cell, p);
  return propagate_all_peers(layer, i, j, p);
}

void CandidateGrid::undo(Mark m) {
  if (m.trail > trail_.size())
    throw std::logic_error("mark is ahead of the trail");
  while (trail_.size() > m.trail) {
    const TrailEntry& e = trail_.back();
    if (e.removal) {
      cells_[e.cell].insert(e.pair);
    } else {
      decided_[e.cell] = 0;
      --decided_count_;
    }
    trail_.pop_back();
  }
}

std::vector<CandidateGrid::Removal> CandidateGrid::removals_since(
    Mark m) const {
  std::vector<Removal> out;
  for (std::size_t t = m.trail; t < trail_.size(); ++t)
    if (trail_[t].removal) out.push_back({trail_[t].cell, trail_[t].pair});
  return out;
}

}  // namespace sudogen
