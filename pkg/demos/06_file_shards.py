"""
Sharding a file
===============

Split a file into k+r self-describing shards, throw some away, and put it
back together.  The command line does the same:

    cauchy-mds encode --p 11 --k 4 --r 3 --out shards/ FILE
    cauchy-mds decode --out FILE.back shards/FILE.00[0-3].cmds
"""

import os
import tempfile
from pathlib import Path

from cauchy_mds import CodeParams
from cauchy_mds.shards import ShardHeader, decode_files, encode_file

with tempfile.TemporaryDirectory() as tmp:
    work = Path(tmp)
    src = work / "photo.raw"
    src.write_bytes(os.urandom(300_000))

    paths = encode_file(src, CodeParams(11, 4, 3), work / "shards")
    for path in paths:
        print(path.name, path.stat().st_size, "bytes")
    print(ShardHeader.unpack(paths[0].read_bytes()))

    # lose three of the seven shards
    survivors = [paths[1], paths[3], paths[5], paths[6]]
    decode_files(survivors, work / "photo.back")
    print("identical:", (work / "photo.back").read_bytes() == src.read_bytes())
