#!/usr/bin/env node
import { runFigure } from "../cli.js";

process.exit(runFigure("spectrum", process.argv.slice(2)));
