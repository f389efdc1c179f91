import json
import logging
import sys
from typing import List, Optional

from cli.commands import COMMANDS
from cli.parser import build_parser
from errors import InputError, ResourceLimitError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3

def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    logger.debug('running %s', args.command)

    try:
        payload, text = COMMANDS[args.command](args)
    except InputError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ResourceLimitError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_RESOURCE_LIMIT

    if args.format == 'json':
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return EXIT_OK

if __name__ == '__main__':
    sys.exit(main())
