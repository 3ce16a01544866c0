#pragma once

#include <string>

namespace bench {

// Shortest decimal representation that round-trips a 64-bit double.
// "nan" and "inf"/"-inf" are emitted in lowercase.
std::string format_double(double v);


// RFC-4180 field quoting (quotes only when needed).
std::string csv_quote(const std::string& field);

}  // namespace bench
