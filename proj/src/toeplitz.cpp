#include "tmspec/toeplitz.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmspec {

PartialSequence::PartialSequence(std::vector<signed char> alphabet, std::uint64_t horizon)
    : alphabet_(std::move(alphabet)), cells_(horizon + 1, 0), known_(horizon + 1, false) {
  if (alphabet_.empty())
    throw std::invalid_argument("PartialSequence: empty alphabet");
  // stage 0: everything is a hole, period 1
  stages_.push_back(ToeplitzStage{1, {0}});
}

signed char PartialSequence::at(std::uint64_t i) const {
  if (!known_[i])
    throw std::logic_error("PartialSequence: cell is an unfilled hole");
  return cells_[i];
}

std::uint64_t PartialSequence::unfilled_count() const {
  std::uint64_t n = 0;
  for (bool k : known_)
    n += !k;
  return n;
}

void PartialSequence::apply(const FillStep &step) {
  if (step.step == 0)
    throw std::invalid_argument("FillStep: step must be >= 1");
  if (std::find(alphabet_.begin(), alphabet_.end(), step.symbol) == alphabet_.end())
    throw std::invalid_argument("FillStep: symbol not in the alphabet");

  if (step.mode == FillMode::absolute) {
    for (std::uint64_t pos = step.start; pos < cells_.size(); pos += step.step) {
      if (known_[pos])
        throw std::logic_error("FillStep: absolute fill would overwrite a filled cell");
      cells_[pos] = step.symbol;
      known_[pos] = true;
    }
  } else {
    std::uint64_t hole_index = 0;
    for (std::uint64_t pos = 0; pos < cells_.size(); ++pos) {
      if (known_[pos])
        continue;
      if (hole_index >= step.start && (hole_index - step.start) % step.step == 0) {
        cells_[pos] = step.symbol;
        known_[pos] = true;
      }
      ++hole_index;
    }
  }
  log_.push_back(step);

  // Track the periodic skeleton. An every-2nd-hole fill starting at the
  // first hole turns a single-hole period (p, {h}) into (2p, {h + p}); any
  // other step leaves the stage structure undetermined from here on.
  const auto &prev = stages_.back();
  if (prev && prev->holes.size() == 1 && step.mode == FillMode::every_kth_hole &&
      step.start == 0 && step.step == 2) {
    const std::uint64_t p = prev->period;
    stages_.push_back(ToeplitzStage{2 * p, {prev->holes[0] + p}});
  } else {
    stages_.emplace_back(std::nullopt);
  }
}

std::optional<ToeplitzStage> PartialSequence::stage(std::size_t steps) const {
  if (steps >= stages_.size())
    return std::nullopt;
  return stages_[steps];
}

PartialSequence toeplitz_build(std::span<const FillStep> steps, std::uint64_t horizon,
                               std::vector<signed char> alphabet) {
  PartialSequence seq(std::move(alphabet), horizon);
  for (const auto &s : steps)
    seq.apply(s);
  return seq;
}

PartialSequence thue_toeplitz_build(unsigned stages, std::uint64_t horizon) {
  PartialSequence seq({0, 1}, horizon);
  for (unsigned s = 0; s < stages; ++s) {
    const signed char symbol = (s % 2 == 0) ? 1 : 0; // 1, 0, 1, 0, ...
    seq.apply(FillStep{FillMode::every_kth_hole, 0, 2, symbol});
  }
  return seq;
}

ToeplitzStage thue_toeplitz_stage(unsigned n) {
  if (n >= 63)
    throw std::range_error("thue_toeplitz_stage: stage too deep");
  const std::uint64_t p = std::uint64_t(1) << n;
  return ToeplitzStage{p, {p - 1}};
}

} // namespace tmspec
