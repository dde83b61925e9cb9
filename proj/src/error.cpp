#include "kansei/error.hpp"

namespace kansei {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::RepresentativeNotInGroup: return "RepresentativeNotInGroup";
    case ErrorCode::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::OutOfRangeRating: return "OutOfRangeRating";
    case ErrorCode::MissingCell: return "MissingCell";
    case ErrorCode::DuplicateRespondent: return "DuplicateRespondent";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::NoSuchGender: return "NoSuchGender";
    case ErrorCode::IncompleteMatrix: return "IncompleteMatrix";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadComponentIndex: return "BadComponentIndex";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::UnknownSample: return "UnknownSample";
    case ErrorCode::UnknownFeature: return "UnknownFeature";
    case ErrorCode::UnknownCanonicalValue: return "UnknownCanonicalValue";
    case ErrorCode::DuplicateColorName: return "DuplicateColorName";
    case ErrorCode::EmptyBallots: return "EmptyBallots";
    case ErrorCode::BadPlotKind: return "BadPlotKind";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::InvalidSetting: return "InvalidSetting";
    }
    return "UnknownError";
}

} // namespace kansei
