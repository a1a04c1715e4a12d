#ifndef DELINS_DELINS_HPP
#define DELINS_DELINS_HPP

// Exact input/output entropies of channels that delete or insert a fixed
// number of symbols, with closed forms, extremal characterizations, and
// brute-force oracles for all of them.

#include "delins/average.hpp"
#include "delins/ball.hpp"
#include "delins/channel.hpp"
#include "delins/checked.hpp"
#include "delins/config.hpp"
#include "delins/embedding.hpp"
#include "delins/entropy.hpp"
#include "delins/enumerate.hpp"
#include "delins/extremal.hpp"
#include "delins/word.hpp"

#endif
