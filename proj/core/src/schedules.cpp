#include "psg/schedules.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace psg {

namespace {

void require_constants(double R, double L) {
  if (!std::isfinite(R) || !(R > 0.0) || !std::isfinite(L) || !(L > 0.0)) {
    throw std::invalid_argument("step schedule: R and L must be positive and finite");
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double eta_constant(double R, double L, std::int64_t horizon, std::int64_t s) {
  require_constants(R, L);
  if (horizon < 1) {
    throw std::invalid_argument("eta_constant: horizon must be >= 1");
  }
  if (s < 1 || s > horizon) {
    throw std::out_of_range("eta_constant: s=" + std::to_string(s) +
                            " outside 1.." + std::to_string(horizon));
  }
  return R / (L * std::sqrt(static_cast<double>(horizon)));
}

double eta_sqrt_decay(double R, double L, std::int64_t s) {
  require_constants(R, L);
  if (s < 1) {
    throw std::out_of_range("eta_sqrt_decay: s must be >= 1");
  }
  // (R / L) / sqrt(s) keeps eta_s * sqrt(s) within one ulp of R / L.
  return (R / L) / std::sqrt(static_cast<double>(s));
}

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::kConstant:
      return "constant";
    case ScheduleKind::kSqrtDecay:
      return "sqrt-decay";
    case ScheduleKind::kCustom:
      return "custom";
  }
  return "unknown";
}

StepSchedule StepSchedule::constant(double R, double L, std::int64_t horizon) {
  require_constants(R, L);
  if (horizon < 1) {
    throw std::invalid_argument("constant schedule: horizon must be >= 1");
  }
  return StepSchedule(ScheduleKind::kConstant, R, L, horizon, {});
}

StepSchedule StepSchedule::sqrt_decay(double R, double L) {
  require_constants(R, L);
  return StepSchedule(ScheduleKind::kSqrtDecay, R, L, 0, {});
}

StepSchedule StepSchedule::custom(std::vector<double> values) {
  const auto n = static_cast<std::int64_t>(values.size());
  return StepSchedule(ScheduleKind::kCustom, 0.0, 0.0, n, std::move(values));
}

std::optional<std::int64_t> StepSchedule::length() const {
  if (kind_ == ScheduleKind::kSqrtDecay) {
    return std::nullopt;
  }
  return horizon_;
}

double StepSchedule::eta(std::int64_t s) const {
  switch (kind_) {
    case ScheduleKind::kConstant:
      return eta_constant(R_, L_, horizon_, s);
    case ScheduleKind::kSqrtDecay:
      return eta_sqrt_decay(R_, L_, s);
    case ScheduleKind::kCustom:
      if (s < 1 || s > horizon_) {
        throw std::out_of_range("custom schedule: s=" + std::to_string(s) +
                                " outside 1.." + std::to_string(horizon_));
      }
      return values_[static_cast<std::size_t>(s - 1)];
  }
  throw std::logic_error("unreachable schedule kind");
}

std::string StepSchedule::describe() const {
  std::ostringstream out;
  out.precision(17);
  out << to_string(kind_);
  switch (kind_) {
    case ScheduleKind::kConstant:
      out << "(R=" << R_ << ",L=" << L_ << ",horizon=" << horizon_ << ")";
      break;
    case ScheduleKind::kSqrtDecay:
      out << "(R=" << R_ << ",L=" << L_ << ")";
      break;
    case ScheduleKind::kCustom:
      out << "(values=" << horizon_ << ")";
      break;
  }
  return out.str();
}

std::optional<ScheduleViolation> validate_schedule(const StepSchedule& schedule,
                                                   std::int64_t horizon) {
  if (horizon < 1) {
    throw std::invalid_argument("validate_schedule: horizon must be >= 1");
  }
  if (const auto len = schedule.length(); len && *len < horizon) {
    return ScheduleViolation{*len + 1, ScheduleViolation::Reason::kTooShort,
                             "schedule defines " + std::to_string(*len) +
                                 " steps, horizon needs " + std::to_string(horizon)};
  }
  double previous = 0.0;
  for (std::int64_t s = 1; s <= horizon; ++s) {
    const double eta = schedule.eta(s);
    if (!std::isfinite(eta) || !(eta > 0.0)) {
      return ScheduleViolation{s, ScheduleViolation::Reason::kNonPositive,
                               "eta_" + std::to_string(s) + " is not positive and finite"};
    }
    if (s > 1 && eta > previous) {
      return ScheduleViolation{s, ScheduleViolation::Reason::kIncrease,
                               "eta_" + std::to_string(s) + " exceeds eta_" +
                                   std::to_string(s - 1)};
    }
    previous = eta;
  }
  return std::nullopt;
}

std::vector<double> read_schedule_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open schedule file: " + path.string());
  }
  std::vector<double> values;
  std::vector<std::size_t> blank_lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) {
      blank_lines.push_back(line_no);
      continue;
    }
    if (!blank_lines.empty()) {
      throw std::invalid_argument("schedule file line " + std::to_string(blank_lines.front()) +
                                  ": blank line inside the value list");
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE) {
      throw std::invalid_argument("schedule file line " + std::to_string(line_no) +
                                  ": not a decimal number: '" + text + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace psg
