import argparse
import os.path as osp

import numpy as np

from entangle_atlas.linalg import maximally_mixed, singlet_state, werner_state, write_state_file
from entangle_atlas.utils.meta import mkdir_or_exist

"""
Example:
python tools/write_state_file.py werner --p 0.5 --out work_dirs/states/werner_0.5.txt
python tools/write_state_file.py mixed --n1 2 --n2 3 --out work_dirs/states/mixed_2x3.txt
"""

parser = argparse.ArgumentParser(description="Write fixture states in the 'n_a n_b' + 'i j re im' state-file format")
parser.add_argument("kind", choices=["werner", "singlet", "mixed"])
parser.add_argument("--p", type=float, default=0.5, help="Werner weight of the singlet")
parser.add_argument("--n1", type=int, default=2)
parser.add_argument("--n2", type=int, default=2)
parser.add_argument("--out", type=str, required=True)
args = parser.parse_args()

if args.kind == "werner":
    rho = werner_state(args.p)
elif args.kind == "singlet":
    rho = singlet_state()
else:
    rho = maximally_mixed((args.n1, args.n2))

mkdir_or_exist(osp.dirname(args.out))
write_state_file(rho, args.out, atol=np.finfo(np.float64).eps)
print(f"Wrote {args.kind} state of dims {rho.dims} to {args.out}")
