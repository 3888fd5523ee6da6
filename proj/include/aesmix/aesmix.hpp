#pragma once

// Umbrella header: pulls in the whole library.

#include "aesmix/bench.hpp"
#include "aesmix/cipher.hpp"
#include "aesmix/gf256.hpp"
#include "aesmix/hex.hpp"
#include "aesmix/kat.hpp"
#include "aesmix/keyschedule.hpp"
#include "aesmix/mixcolumns.hpp"
#include "aesmix/selftest.hpp"
#include "aesmix/transforms.hpp"
