#pragma once

// ASM <-> partial sum matrix <-> triangle correspondence.

#include "asmproj/core.hpp"

namespace asmproj {

// p(i,j) = sum of column j of a over rows 1..i.
PartialSumMatrix partial_sum(const Asm& a);

// Row differences of p. Throws NotAnAsm when the differences do not form an
// ASM, which happens for (0,1)-matrices not arising from any ASM.
Asm asm_from_partial_sum(const PartialSumMatrix& p);

// Row i of the triangle lists the columns (1-based) of the ones in row i.
// Accepts any (0,1)-matrix whose row i has i ones; throws EntryOutOfRange or
// BadRowSums otherwise.
RowIncreasingTriangle triangle_from_01(const IntMatrix& m);

IntMatrix matrix01_from_triangle(const RowIncreasingTriangle& t);

MonotoneTriangle monotone_from_asm(const Asm& a);

// Checks the reconstructed matrix; a failure here is an Internal error.
Asm asm_from_monotone(const MonotoneTriangle& t);

}  // namespace asmproj
