#pragma once

#include "xmodkit/error.hpp"
#include "xmodkit/group.hpp"
#include "xmodkit/homs.hpp"
#include "xmodkit/families.hpp"
#include "xmodkit/groupoid.hpp"
#include "xmodkit/group_groupoid.hpp"
#include "xmodkit/crossed_module.hpp"
#include "xmodkit/equivalence.hpp"
#include "xmodkit/lifting.hpp"
#include "xmodkit/serialize.hpp"
#include "xmodkit/dot.hpp"
#include "xmodkit/parallel.hpp"
#include "xmodkit/catalog.hpp"
#include "xmodkit/refs.hpp"
#include "xmodkit/verify.hpp"
