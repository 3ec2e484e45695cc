#pragma once

// Newform and half-integral weight data files (JSON) and the central value
// configuration. Parse failures report line and column.

#include "sl2p/forms_engine.hpp"
#include "sl2p/lfunction.hpp"

#include <optional>
#include <string>

namespace sl2p {

struct ingest_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IngestResult {
    NewformData newform;
    std::optional<HalfIntegralData> halfIntegral;  // present when c_fund is given
};

IngestResult ingest_newform_text(const std::string& text, const std::string& source = "<string>");
IngestResult ingest_newform(const std::string& path);

CentralValueInput ingest_central_value_text(const std::string& text, const std::string& source = "<string>");
CentralValueInput ingest_central_value(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace sl2p
