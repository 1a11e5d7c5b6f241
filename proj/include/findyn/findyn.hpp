#pragma once

// Umbrella header: the whole toolkit.

#include "findyn/chain.hpp"
#include "findyn/cli.hpp"
#include "findyn/errors.hpp"
#include "findyn/gallery.hpp"
#include "findyn/invlimit.hpp"
#include "findyn/io.hpp"
#include "findyn/scalar.hpp"
#include "findyn/shadow.hpp"
#include "findyn/space.hpp"
