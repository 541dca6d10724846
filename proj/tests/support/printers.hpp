#pragma once

#include <ostream>

#include "postlie/bimould.hpp"
#include "postlie/io.hpp"

namespace postlie {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << format_poly(p); }
inline void PrintTo(const Tensor2& t, std::ostream* os) { *os << format_tensor(t); }
inline void PrintTo(const Bimould& b, std::ostream* os) { *os << to_string(b); }
inline void PrintTo(const MPoly& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace postlie
