#include "tsa/error.hpp"

namespace tsa {

const char* to_string(IngestErrorCode code) noexcept {
    switch (code) {
        case IngestErrorCode::missing_file: return "missing_file";
        case IngestErrorCode::missing_column: return "missing_column";
        case IngestErrorCode::malformed_row: return "malformed_row";
        case IngestErrorCode::month_gap: return "month_gap";
        case IngestErrorCode::duplicate_month: return "duplicate_month";
        case IngestErrorCode::insufficient_data: return "insufficient_data";
    }
    return "unknown";
}

}  // namespace tsa
