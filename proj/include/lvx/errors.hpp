#pragma once

#include <stdexcept>

namespace lvx {

// One exception type per failure class the public operations raise.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct KindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UndefinedMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingCellError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lvx
