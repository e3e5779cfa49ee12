#pragma once

#include <stdexcept>
#include <string>

namespace sentcause {

/// Machine-readable failure categories. The CLI maps these onto its
/// JSON error output; tests assert on them directly.
enum class ErrorCode {
    // CSV / series ingestion
    MissingColumn,
    UnparsableDate,
    UnparsableValue,
    DuplicateDate,
    EmptySeries,
    // alignment / transforms
    EmptyIntersection,
    SeriesTooShort,
    InsufficientObservations,
    InvalidRatio,
    EmptyTrain,
    // regression
    RankDeficient,
    ShapeMismatch,
    // stats
    DomainError,
    NonConvergence,
    DegenerateResiduals,
    ConstantSeries,
    // sentiment
    SingleClassCorpus,
    EmptyCorpus,
    EmptyInput,
    // pipeline
    EmptyTestSegment,
    IoError,
    BadConfig,
};

[[nodiscard]] const char* error_code_name(ErrorCode code) noexcept;

/// Single exception type for all domain errors; `code()` carries the
/// category, `what()` the human-readable context (file, row, bound).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const char* code_name() const noexcept { return error_code_name(code_); }

  private:
    ErrorCode code_;
};

}  // namespace sentcause
