#!/usr/bin/env node
import { runFigure } from "../cli.js";

process.exit(runFigure("lambda_max", process.argv.slice(2)));
