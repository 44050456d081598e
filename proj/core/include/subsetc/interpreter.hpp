#pragma once

#include <cstdint>

#include "subsetc/ast.hpp"

namespace subsetc {

// Reference evaluation of a checked program; the differential oracle for
// the code generator. Arithmetic is two's-complement 64-bit wraparound,
// comparisons and logical operators yield 0 or 1, and && / || evaluate
// both operands, mirroring the straight-line lowering. Falling off the end
// of main yields the last evaluated expression value (0 if none), which is
// exactly what X0 holds when the generated epilogue runs.
std::int64_t interpret(const Program& program);

// Low 8 bits as observed through the process exit status.
inline int exit_status(std::int64_t value) {
    return static_cast<int>(static_cast<std::uint64_t>(value) & 0xFF);
}

}  // namespace subsetc
