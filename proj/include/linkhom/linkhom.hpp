#ifndef LINKHOM_LINKHOM_HPP
#define LINKHOM_LINKHOM_HPP

#include "linkhom/action.hpp"
#include "linkhom/braid.hpp"
#include "linkhom/cache.hpp"
#include "linkhom/decide.hpp"
#include "linkhom/decomposition.hpp"
#include "linkhom/dsl.hpp"
#include "linkhom/io.hpp"
#include "linkhom/link.hpp"
#include "linkhom/series.hpp"
#include "linkhom/word.hpp"

#endif
