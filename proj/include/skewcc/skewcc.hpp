#pragma once

// Convenience umbrella header.

#include "code_lab.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "galois_field.hpp"
#include "linalg.hpp"
#include "skew_polynomial.hpp"
