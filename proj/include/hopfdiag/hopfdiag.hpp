#pragma once

#include "acceptance.hpp"
#include "bundle_io.hpp"
#include "invariant.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "rewrite.hpp"
#include "translator.hpp"
