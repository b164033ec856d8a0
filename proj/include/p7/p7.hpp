// p7.hpp - Umbrella header for the 7x7 square codec

#pragma once

#include "p7/alphabet.hpp"
#include "p7/codec.hpp"
#include "p7/errors.hpp"
#include "p7/keying.hpp"
#include "p7/square_io.hpp"
#include "p7/text.hpp"
#include "p7/token.hpp"
