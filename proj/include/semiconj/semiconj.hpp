// Convenience umbrella for the whole library.

#pragma once

#include "semiconj/canonical.hpp"
#include "semiconj/cayley_table.hpp"
#include "semiconj/condition.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/enumeration.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/goldens.hpp"
#include "semiconj/monoid_view.hpp"
#include "semiconj/relation.hpp"
#include "semiconj/table_io.hpp"
