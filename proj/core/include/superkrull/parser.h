#ifndef SUPERKRULL_PARSER_H_
#define SUPERKRULL_PARSER_H_

#include <string_view>

#include "superkrull/presentation.h"

namespace superkrull {

// Line-oriented presentation format:
//
//   field Q            # or GF(p)
//   even x1 x2
//   odd y1 y2 y3
//   relations:
//   x1*y1 - y2*y3*y1
//
// Throws ParseError with a 1-based line and column.
SuperPresentation ParsePresentation(std::string_view text);

// Parses one expression in the variables of `ring`. The result may be
// inhomogeneous or zero.
SuperPolynomial ParseSuperPolynomial(const SuperPresentation& ring,
                                     std::string_view text);

}  // namespace superkrull

#endif  // SUPERKRULL_PARSER_H_
