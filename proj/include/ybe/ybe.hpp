#ifndef YBE_YBE_HPP_
#define YBE_YBE_HPP_

#include "arith.hpp"
#include "brace.hpp"
#include "classify.hpp"
#include "cocyclic.hpp"
#include "error.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "perm.hpp"
#include "solution.hpp"

#endif  // YBE_YBE_HPP_
