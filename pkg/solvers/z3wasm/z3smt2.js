#!/usr/bin/env node
// One-shot SMT-LIB2 solver front end backed by the Z3 WebAssembly build.
// Usage: node z3smt2.js FILE.smt2
// Prints Z3's output (verdict plus get-value response) to stdout.
'use strict';

const fs = require('fs');
const { init } = require('z3-solver');

async function main() {
  const file = process.argv[2];
  if (!file) {
    process.stderr.write('usage: node z3smt2.js FILE.smt2\n');
    process.exit(2);
  }
  const text = fs.readFileSync(file, 'utf8');
  const { Z3 } = await init();
  const cfg = Z3.mk_config();
  const ctx = Z3.mk_context(cfg);
  const out = await Z3.eval_smtlib2_string(ctx, text);
  // Exit immediately: keeps wasm worker threads from stalling the process.
  fs.writeSync(1, out.endsWith('\n') ? out : out + '\n');
  process.exit(0);
}

main().catch((err) => {
  process.stderr.write(String(err && err.stack ? err.stack : err) + '\n');
  process.exit(1);
});
