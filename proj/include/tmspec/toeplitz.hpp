#ifndef TMSPEC_TOEPLITZ_HPP
#define TMSPEC_TOEPLITZ_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tmspec {

// One progression fill applied to a partial sequence.
//   absolute:       fill positions start, start+step, start+2*step, ...
//                   (filling an already-filled cell is an error)
//   every_kth_hole: enumerate the current holes in ascending order and fill
//                   hole #start, #start+step, ... (only holes are touched)
enum class FillMode { absolute, every_kth_hole };

struct FillStep {
  FillMode mode;
  std::uint64_t start;
  std::uint64_t step;
  signed char symbol;
};

// Periodic skeleton after some construction stage: the sequence repeats with
// the given period except at the hole residues (filled at later stages).
struct ToeplitzStage {
  std::uint64_t period = 1;
  std::vector<std::uint64_t> holes; // residues mod period, ascending
};

// A one-sided sequence over a finite alphabet plus holes, built by
// progression fills. A cell once filled is never overwritten.
class PartialSequence {
public:
  PartialSequence(std::vector<signed char> alphabet, std::uint64_t horizon);

  void apply(const FillStep &step);

  std::uint64_t horizon() const { return cells_.size() - 1; }
  bool filled(std::uint64_t i) const { return known_[i]; }
  signed char at(std::uint64_t i) const; // throws std::logic_error on a hole
  std::uint64_t unfilled_count() const;

  const std::vector<FillStep> &fill_log() const { return log_; }

  // Periodic skeleton after the first `steps` fills, when derivable (chains
  // of every-2nd-hole fills keep a single hole per period). std::nullopt when
  // the fill log does not determine a periodic stage structure.
  std::optional<ToeplitzStage> stage(std::size_t steps) const;

private:
  std::vector<signed char> alphabet_;
  std::vector<signed char> cells_;
  std::vector<bool> known_;
  std::vector<FillStep> log_;
  std::vector<std::optional<ToeplitzStage>> stages_;
};

PartialSequence toeplitz_build(std::span<const FillStep> steps, std::uint64_t horizon,
                               std::vector<signed char> alphabet = {0, 1});

// The construction of the Thue-Toeplitz sequence: stage s fills every second
// unfilled place with 1, 0, 1, 0, ... After n stages the filled pattern is
// B_n ? B_n ? ... with |B_n| = 2^n - 1 and the hole at residue 2^n - 1.
PartialSequence thue_toeplitz_build(unsigned stages, std::uint64_t horizon);

ToeplitzStage thue_toeplitz_stage(unsigned n);

} // namespace tmspec

#endif
