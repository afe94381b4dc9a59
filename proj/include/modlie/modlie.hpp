#pragma once

#include "modlie/error.hpp"
#include "modlie/field.hpp"
#include "modlie/matrix.hpp"
#include "modlie/polynomial.hpp"
#include "modlie/linalg.hpp"
#include "modlie/subspaces.hpp"
#include "modlie/liealg.hpp"
#include "modlie/repr.hpp"
#include "modlie/killing.hpp"
#include "modlie/jordan.hpp"
#include "modlie/restricted.hpp"
#include "modlie/algebra_file.hpp"
