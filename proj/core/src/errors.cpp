#include "sentcause/errors.hpp"

namespace sentcause {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MissingColumn: return "MissingColumn";
        case ErrorCode::UnparsableDate: return "UnparsableDate";
        case ErrorCode::UnparsableValue: return "UnparsableValue";
        case ErrorCode::DuplicateDate: return "DuplicateDate";
        case ErrorCode::EmptySeries: return "EmptySeries";
        case ErrorCode::EmptyIntersection: return "EmptyIntersection";
        case ErrorCode::SeriesTooShort: return "SeriesTooShort";
        case ErrorCode::InsufficientObservations: return "InsufficientObservations";
        case ErrorCode::InvalidRatio: return "InvalidRatio";
        case ErrorCode::EmptyTrain: return "EmptyTrain";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::DegenerateResiduals: return "DegenerateResiduals";
        case ErrorCode::ConstantSeries: return "ConstantSeries";
        case ErrorCode::SingleClassCorpus: return "SingleClassCorpus";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::EmptyTestSegment: return "EmptyTestSegment";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::BadConfig: return "BadConfig";
    }
    return "Unknown";
}

}  // namespace sentcause
