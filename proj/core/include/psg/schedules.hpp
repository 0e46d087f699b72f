#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace psg {

/// R / (L sqrt(horizon)) for every s in 1..horizon.
double eta_constant(double R, double L, std::int64_t horizon, std::int64_t s);

/// R / (L sqrt(s)).
double eta_sqrt_decay(double R, double L, std::int64_t s);

enum class ScheduleKind { kConstant, kSqrtDecay, kCustom };

std::string to_string(ScheduleKind kind);

/// Immutable step-size sequence eta_1, eta_2, ...
///
/// Constant schedules are anchored to the horizon they were built for, and
/// custom schedules are finite explicit lists; asking either for an index
/// past its end throws std::out_of_range.
class StepSchedule {
 public:
  static StepSchedule constant(double R, double L, std::int64_t horizon);
  static StepSchedule sqrt_decay(double R, double L);
  static StepSchedule custom(std::vector<double> values);

  ScheduleKind kind() const { return kind_; }
  double R() const { return R_; }
  double L() const { return L_; }

  /// Number of defined steps, or nullopt for the unbounded sqrt-decay kind.
  std::optional<std::int64_t> length() const;

  /// eta_s for 1-based s.
  double eta(std::int64_t s) const;

  std::string describe() const;

 private:
  StepSchedule(ScheduleKind kind, double R, double L, std::int64_t horizon,
               std::vector<double> values)
      : kind_(kind), R_(R), L_(L), horizon_(horizon), values_(std::move(values)) {}

  ScheduleKind kind_;
  double R_ = 0.0;
  double L_ = 0.0;
  std::int64_t horizon_ = 0;
  std::vector<double> values_;
};

struct ScheduleViolation {
  enum class Reason { kNonPositive, kIncrease, kTooShort };
  std::int64_t index = 0;  // first offending 1-based s
  Reason reason = Reason::kNonPositive;
  std::string message;
};

/// Checks eta_s > 0 and eta_{s+1} <= eta_s for s < horizon.
/// Returns the first violation, or nullopt when the schedule is usable.
std::optional<ScheduleViolation> validate_schedule(const StepSchedule& schedule,
                                                   std::int64_t horizon);

/// Reads one decimal per line; line i holds eta_i. Blank trailing lines are
/// ignored. Parse errors throw std::invalid_argument naming the line.
/// Positivity is left to validate_schedule.
std::vector<double> read_schedule_file(const std::filesystem::path& path);

}  // namespace psg
