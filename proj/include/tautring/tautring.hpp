#ifndef TAUTRING_TAUTRING_HPP
#define TAUTRING_TAUTRING_HPP

#include "tautring/constants.hpp"
#include "tautring/errors.hpp"
#include "tautring/exact_core.hpp"
#include "tautring/faber.hpp"
#include "tautring/fcache.hpp"
#include "tautring/identities.hpp"
#include "tautring/matrix.hpp"
#include "tautring/memo.hpp"
#include "tautring/multiindex.hpp"
#include "tautring/parallel.hpp"
#include "tautring/partitions.hpp"
#include "tautring/rational.hpp"

#endif // TAUTRING_TAUTRING_HPP
