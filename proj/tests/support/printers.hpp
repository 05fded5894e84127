// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_TESTS_PRINTERS_HPP
#define CTW_TESTS_PRINTERS_HPP

#include <ostream>

#include "ctw/word.hpp"

namespace ctw {

inline void PrintTo(const Word& w, std::ostream* os) { *os << format_word(w); }
inline void PrintTo(Letter l, std::ostream* os) { *os << format_word(Word::from_reduced({l})); }

}  // namespace ctw

#endif  // CTW_TESTS_PRINTERS_HPP
