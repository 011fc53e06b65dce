#!/usr/bin/env node
import { runFigure } from "../cli.js";

process.exit(runFigure("collimation_powers", process.argv.slice(2)));
