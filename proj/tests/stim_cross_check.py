# Copyright 2026 The directional-codes Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Cross-checks emitted circuits against Stim: noiseless runs are detection-event free and the
noisy circuit yields a detector error model."""

import os
import subprocess
import sys
import tempfile

try:
    import stim
except ImportError:
    print("stim is not installed; skipping")
    sys.exit(77)

INSTANCES = [
    ("NE3N", "18,0", "0,4", "1"),
    ("N2E2N2", "8,0", "0,16", "1"),
    ("N2E2N2", "-2,8", "6,8", "1"),
    ("NE3N", "12,0", "0,12", "3"),
    ("NE2N", "6,0", "0,6", "1"),
]


def run(cli, *args):
    subprocess.run([cli, *args], check=True, stdout=subprocess.DEVNULL)


def check(cli, tmp, seq, v1, v2, layout, iswap):
    tag = f"{seq}_{v1}_{v2}_{layout}".replace(",", "_").replace("-", "m")
    code = os.path.join(tmp, tag, "code")
    run(cli, "build", "--dirs", seq, f"--v1={v1}", f"--v2={v2}", "--layout", layout, "--out", code)
    extra = ["--iswap"] if iswap else []
    clean_dir = os.path.join(tmp, tag, f"clean{int(iswap)}")
    noisy_dir = os.path.join(tmp, tag, f"noisy{int(iswap)}")
    run(cli, "circuit", "--code", code, "--rounds", "4", "--out", clean_dir, *extra)
    run(cli, "circuit", "--code", code, "--rounds", "4", "--noise", "si1000", "--p", "1e-3", "--out", noisy_dir, *extra)

    clean = stim.Circuit.from_file(os.path.join(clean_dir, "circuit.stim"))
    sampler = clean.compile_detector_sampler()
    dets, obs = sampler.sample(64, separate_observables=True)
    if dets.any() or obs.any():
        return f"{tag}: noiseless circuit fires detectors or flips observables"
    # Stim's own determinism analysis must agree.
    clean.detector_error_model()

    noisy = stim.Circuit.from_file(os.path.join(noisy_dir, "circuit.stim"))
    dem = noisy.detector_error_model(decompose_errors=False)
    if dem.num_detectors != clean.num_detectors or dem.num_observables != clean.num_observables:
        return f"{tag}: detector error model shape differs from the circuit"
    if dem.num_errors == 0:
        return f"{tag}: noisy circuit has no error mechanisms"
    print(f"ok {tag} iswap={iswap}: {clean.num_detectors} detectors, {dem.num_errors} error mechanisms")
    return None


def main():
    cli = sys.argv[1]
    failures = []
    with tempfile.TemporaryDirectory() as tmp:
        for inst in INSTANCES:
            for iswap in (False, True):
                err = check(cli, tmp, *inst, iswap)
                if err:
                    failures.append(err)
    for f in failures:
        print("FAIL", f)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
