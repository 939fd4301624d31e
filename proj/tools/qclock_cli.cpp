// Copyright 2026 The qclock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qclock-cli: runs one experiment scenario and writes its CSV.

#include <cstdio>
#include <cstring>

#include "qclock/qclock.h"

namespace {

constexpr const char *kUsage =
    "usage: qclock-cli --scenario NAME [options]\n"
    "\n"
    "scenarios: sync, sweep-phi, boost, tradeoff, lemma1, reduction\n"
    "\n"
    "options:\n"
    "  --n BITS          target accuracy in bits (default 3)\n"
    "  --delta P         failure probability in (0, 1/2); enlarges the register\n"
    "  --omega0 HZ       base tick rate (default 1)\n"
    "  --t-true SECONDS  fixed clock offset (default: sampled per trial)\n"
    "  --trials N        number of trials (default 100)\n"
    "  --seed S          64-bit seed (default 0)\n"
    "  --out PATH        CSV output (default <scenario>.csv)\n"
    "  --config PATH     'key = value' file; flags override it\n";

int exit_code(qclock_status status) {
    switch (status) {
        case QCLOCK_OK:
            return 0;
        case QCLOCK_ERR_USAGE:
        case QCLOCK_ERR_INVALID_ARGUMENT:
            return 2;
        case QCLOCK_ERR_IO:
            return 3;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char **argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--help") == 0 || std::strcmp(argv[i], "-h") == 0) {
            std::fputs(kUsage, stdout);
            return 0;
        }
        if (std::strcmp(argv[i], "--version") == 0) {
            std::printf("qclock %s\n", qclock_version());
            return 0;
        }
    }

    qclock_spec *spec = nullptr;
    if (qclock_spec_create(&spec) != QCLOCK_OK) {
        std::fprintf(stderr, "qclock-cli: %s\n", qclock_last_error());
        return 1;
    }

    qclock_status status = qclock_spec_parse_args(spec, argc - 1, argv + 1);
    if (status != QCLOCK_OK) {
        std::fprintf(stderr, "qclock-cli: %s\n\n%s", qclock_last_error(), kUsage);
        qclock_spec_destroy(spec);
        return exit_code(status);
    }

    char summary[1024];
    status = qclock_run(spec, summary, sizeof summary);
    qclock_spec_destroy(spec);
    if (status != QCLOCK_OK) {
        std::fprintf(stderr, "qclock-cli: %s\n", qclock_last_error());
        return exit_code(status);
    }
    std::printf("%s\n", summary);
    return 0;
}
