//! Fixture templates. Controls and invisible characters are written as
//! named placeholders; `{U+XXXX}` stands for a single code point.

use super::Technique::{self, *};
use crate::finding::CheckId;

const STR: CheckId = CheckId::BidiUnterminatedString;
const COM: CheckId = CheckId::BidiUnterminatedComment;
const SPLIT: CheckId = CheckId::InvisibleTerminatorSplit;
const PAIR: CheckId = CheckId::HomoglyphConfusablePair;
const MIXED: CheckId = CheckId::HomoglyphMixedScript;

/// Expected display of one attack line.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Golden {
    pub line: usize,
    pub expected: &'static str,
    /// Set when the reference display cannot be produced by reordering the
    /// line on its own.
    pub limitation: Option<&'static str>,
}

const fn exact(line: usize, expected: &'static str) -> Golden {
    Golden {
        line,
        expected,
        limitation: None,
    }
}

const BRACE_MOVED: &str = "the reference display moves the mirrored brace to its own line above the \
                           comment, while the same bytes elsewhere display with the brace after it; a \
                           single-line display keeps it after the comment";

#[derive(Debug, Clone, Copy)]
pub(crate) struct Template {
    pub technique: Technique,
    pub language: &'static str,
    pub attack: &'static str,
    /// Explicit clean text; derived from `attack` when absent.
    pub clean: Option<&'static str>,
    pub expected: &'static [(CheckId, usize)],
    pub goldens: &'static [Golden],
}

const fn plain(
    technique: Technique,
    language: &'static str,
    attack: &'static str,
    expected: &'static [(CheckId, usize)],
) -> Template {
    Template {
        technique,
        language,
        attack,
        clean: None,
        expected,
        goldens: &[],
    }
}

pub(crate) const TEMPLATES: &[Template] = &[
    // Early return.
    Template {
        technique: EarlyReturn,
        language: "python",
        attack: r##"#!/usr/bin/env python3
bank = { 'alice': 100 }

def subtract_funds(account: str, amount: int):
    ''' Subtract funds from bank account then {RLI}''' ;return
    bank[account] -= amount
    return

subtract_funds('alice', 50)
"##,
        clean: Some(
            r##"#!/usr/bin/env python3
bank = { 'alice': 100 }

def subtract_funds(account: str, amount: int):
    ''' Subtract funds from bank account then return; '''
    bank[account] -= amount
    return

subtract_funds('alice', 50)
"##,
        ),
        expected: &[(STR, 5)],
        goldens: &[exact(5, "    ''' Subtract funds from bank account then return; '''")],
    },
    Template {
        technique: EarlyReturn,
        language: "c",
        attack: r##"#include <stdio.h>

int main() {
    /* Say hello; newline {RLI} */ return 0 ;
    printf("Hello world.\n");
    return 0;
}
"##,
        clean: Some(
            r##"#include <stdio.h>

int main() {
    /* Say hello; newline; return 0 */
    printf("Hello world.\n");
    return 0;
}
"##,
        ),
        expected: &[(COM, 4)],
        goldens: &[Golden {
            line: 4,
            expected: "    /* Say hello; newline; return 0 */",
            limitation: Some(
                "the reference display keeps the comment closer at the end of the line; reversing the \
                 isolated tail ` */ return 0 ;` yields `; 0 return /*` under explicit levels and under \
                 full bidirectional resolution alike",
            ),
        }],
    },
    plain(
        EarlyReturn,
        "cpp",
        r##"#include <iostream>

void greet() {
    /* Say hello; newline{RLI} /*/ return ;
    std::cout << "Hello world.\n";
}

int main() {
    greet();
    return 0;
}
"##,
        &[(COM, 4)],
    ),
    plain(
        EarlyReturn,
        "csharp",
        r##"using System;

class Program
{
    static void Greet()
    {
        /* Say hello; newline{RLI} /*/ return ;
        Console.WriteLine("Hello world.");
    }

    static void Main()
    {
        Greet();
    }
}
"##,
        &[(COM, 7)],
    ),
    plain(
        EarlyReturn,
        "javascript",
        r##"#!/usr/bin/env node

function greet() {
    /* Say hello; newline{RLI} /*/ return ;
    console.log("Hello world.");
}

greet();
"##,
        &[(COM, 4)],
    ),
    plain(
        EarlyReturn,
        "java",
        r##"public class Greeter {
    static void greet() {
        /* Say hello; newline{RLI} /*/ return ;
        System.out.println("Hello world.");
    }

    public static void main(String[] args) {
        greet();
    }
}
"##,
        &[(COM, 3)],
    ),
    plain(
        EarlyReturn,
        "rust",
        r##"fn greet() {
    /* Say hello; newline{RLI} */ return ;
    println!("Hello world.");
}

fn main() {
    greet();
}
"##,
        &[(COM, 2)],
    ),
    plain(
        EarlyReturn,
        "go",
        r##"package main

import "fmt"

func greet() {
    /* Say hello; newline{RLI} /*/ return ;
    fmt.Println("Hello world.")
}

func main() {
    greet()
}
"##,
        &[(COM, 6)],
    ),
    plain(
        EarlyReturn,
        "sql",
        r##"BEGIN TRANSACTION;
/* Transfer to bob; then{RLI} /*/ ROLLBACK ;
UPDATE accounts SET balance = balance - 100 WHERE owner = 'alice';
UPDATE accounts SET balance = balance + 100 WHERE owner = 'bob';
COMMIT;
"##,
        &[(COM, 2)],
    ),
    plain(
        EarlyReturn,
        "bash",
        r##"#!/usr/bin/env bash

subtract_funds() {
    local note="Subtract funds from account then {RLI}" ;return
    balance=$((balance - $1))
}

balance=100
subtract_funds 50
echo "$balance"
"##,
        &[(STR, 4)],
    ),
    plain(
        EarlyReturn,
        "assembly",
        r##"    .text
    .globl subtract_funds
subtract_funds:
    .ascii "Subtract funds from account then {RLI}" ;ret
    subq %rsi, (%rdi)
    ret
"##,
        &[(STR, 4)],
    ),
    plain(
        EarlyReturn,
        "solidity",
        r##"// SPDX-License-Identifier: MIT
pragma solidity ^0.8.0;

contract Greeter {
    event Greeted(string message);

    function greet() public {
        /* Say hello; newline{RLI} /*/ return ;
        emit Greeted("Hello world.");
    }
}
"##,
        &[(COM, 8)],
    ),
    // Commenting out.
    Template {
        technique: CommentingOut,
        language: "c",
        attack: r##"#include <stdio.h>
#include <string.h>

int main() {
    bool isAdmin = false;
    /*{RLO} } {LRI}if (isAdmin){PDI} {LRI} begin admins only */
    printf("You are an admin.\n");
    /* end admins only {RLO} { {LRI}*/
    return 0;
}
"##,
        clean: Some(
            r##"#include <stdio.h>
#include <stdbool.h>

int main() {
    bool isAdmin = false;
    /* begin admins only */ if (isAdmin) {
        printf("You are an admin.\n");
    }
    /* end admins only */
    return 0;
}
"##,
        ),
        expected: &[(COM, 6), (COM, 8)],
        goldens: &[
            exact(6, "    /* begin admins only */ if (isAdmin) {"),
            Golden {
                line: 8,
                expected: "    /* end admins only */",
                limitation: Some(BRACE_MOVED),
            },
        ],
    },
    Template {
        technique: CommentingOut,
        language: "cpp",
        attack: r##"#include <iostream>

int main() {
    bool isAdmin = false;
    /*{RLO} } {LRI}if (isAdmin){PDI} {LRI} begin admins only */
    std::cout << "You are an admin.\n";
    /* end admins only {RLO} { {LRI}*/
    return 0;
}
"##,
        clean: Some(
            r##"#include <iostream>

int main() {
    bool isAdmin = false;
    /* begin admins only */ if (isAdmin) {
        std::cout << "You are an admin.\n";
    /* end admins only */ }
    return 0;
}
"##,
        ),
        expected: &[(COM, 5), (COM, 7)],
        goldens: &[
            exact(5, "    /* begin admins only */ if (isAdmin) {"),
            exact(7, "    /* end admins only */ }"),
        ],
    },
    Template {
        technique: CommentingOut,
        language: "java",
        attack: r##"public class AccessCheck {
    public static void main(String[] args) {
        boolean isAdmin = false;
        /*{RLO} } {LRI}if (isAdmin){PDI} {LRI} begin admins only */
        System.out.println("You are an admin.");
        /* end admins only {RLO} { {LRI}*/
    }
}
"##,
        clean: Some(
            r##"public class AccessCheck {
    public static void main(String[] args) {
        boolean isAdmin = false;
        /* begin admins only */ if (isAdmin) {
            System.out.println("You are an admin.");
        }
        /* end admins only */
    }
}
"##,
        ),
        expected: &[(COM, 4), (COM, 6)],
        goldens: &[
            exact(4, "        /* begin admins only */ if (isAdmin) {"),
            Golden {
                line: 6,
                expected: "        /* end admins only */",
                limitation: Some(BRACE_MOVED),
            },
        ],
    },
    Template {
        technique: CommentingOut,
        language: "rust",
        attack: r##"fn main() {
    let is_admin = false;
    /*{RLO} } {LRI}if is_admin{PDI} {LRI} begin admins only */
    println!("You are an admin.");
    /* end admins only {RLO} { {LRI}*/
}
"##,
        clean: Some(
            r##"fn main() {
    let is_admin = false;
    /* begin admins only */ if is_admin {
        println!("You are an admin.");
    }
    /* end admins only */
}
"##,
        ),
        expected: &[(COM, 3), (COM, 5)],
        goldens: &[
            exact(3, "    /* begin admins only */ if is_admin {"),
            Golden {
                line: 5,
                expected: "    /* end admins only */",
                limitation: Some(BRACE_MOVED),
            },
        ],
    },
    Template {
        technique: CommentingOut,
        language: "python",
        attack: r##"#!/usr/bin/env python3
access_level = "user"
if access_level != 'none{RLO}{LRI}': # Check if admin{PDI}{LRI}' and access_level != 'user
    print("You are an admin.\n");
"##,
        clean: Some(
            r##"#!/usr/bin/env python3
access_level = "user"
if access_level != 'none' and access_level != 'user': # Check if admin
    print("You are an admin.")
"##,
        ),
        expected: &[(STR, 3)],
        goldens: &[exact(
            3,
            "if access_level != 'none' and access_level != 'user': # Check if admin",
        )],
    },
    Template {
        technique: CommentingOut,
        language: "go",
        attack: r##"package main

import "fmt"

func main() {
    var isAdmin = false
    var isSuperAdmin = false
    isAdmin = isAdmin || isSuperAdmin
    /*{RLO} } {LRI}if (isAdmin){PDI} {LRI} begin admins only */
        fmt.Println("You are an admin.")
    /* end admins only {RLO} { {LRI}*/
}
"##,
        clean: Some(
            r##"package main

import "fmt"

func main() {
    var isAdmin = false
    var isSuperAdmin = false
    isAdmin = isAdmin || isSuperAdmin
    /* begin admins only */ if (isAdmin) {
        fmt.Println("You are an admin.")
    /* end admins only */ }
}
"##,
        ),
        expected: &[(COM, 9), (COM, 11)],
        goldens: &[
            exact(9, "    /* begin admins only */ if (isAdmin) {"),
            exact(11, "    /* end admins only */ }"),
        ],
    },
    Template {
        technique: CommentingOut,
        language: "javascript",
        attack: r##"#!/usr/bin/env node

var isAdmin = false;
/*{RLO} } {LRI}if (isAdmin){PDI} {LRI} begin admins only */
    console.log("You are an admin.");
/* end admins only {RLO} { {LRI}*/
"##,
        clean: Some(
            r##"#!/usr/bin/env node

var isAdmin = false;
/* begin admins only */ if (isAdmin) {
    console.log("You are an admin.");
/* end admins only */ }
"##,
        ),
        expected: &[(COM, 4), (COM, 6)],
        goldens: &[
            exact(4, "/* begin admins only */ if (isAdmin) {"),
            exact(6, "/* end admins only */ }"),
        ],
    },
    plain(
        CommentingOut,
        "csharp",
        r##"using System;

class Program
{
    static void Main()
    {
        bool isAdmin = false;
        /*{RLO} } {LRI}if (isAdmin){PDI} {LRI} begin admins only */
            Console.WriteLine("You are an admin.");
        /* end admins only {RLO} { {LRI}*/
    }
}
"##,
        &[(COM, 8), (COM, 10)],
    ),
    plain(
        CommentingOut,
        "solidity",
        r##"// SPDX-License-Identifier: MIT
pragma solidity ^0.8.0;

contract Vault {
    function withdraw(bool isAdmin) public {
        require(msg.sender != address(0));
        /*{RLO} } {LRI}if (isAdmin){PDI} {LRI} begin admins only */
            payable(msg.sender).transfer(address(this).balance);
        /* end admins only {RLO} { {LRI}*/
    }
}
"##,
        &[(COM, 7), (COM, 9)],
    ),
    plain(
        CommentingOut,
        "sql",
        r##"UPDATE accounts
SET role = 'guest'
    /*{RLO} {LRI}WHERE role = 'guest'{PDI} {LRI} reset guests only */
;
"##,
        &[(COM, 3)],
    ),
    plain(
        CommentingOut,
        "bash",
        r##"#!/usr/bin/env bash
access_level="user"
if [ "$access_level" != "none{RLO}{LRI}" ]; then # Check if admin{PDI}{LRI}" ] && [ "$access_level" != "user
    echo "You are an admin."
fi
"##,
        &[(STR, 3)],
    ),
    plain(
        CommentingOut,
        "assembly",
        r##"    .section .rodata
denied_roles:
    .asciz "none{RLO}{LRI}" # denied roles{PDI}{LRI}", "user
    .text
"##,
        &[(STR, 3)],
    ),
    // Stretched string.
    Template {
        technique: StretchedString,
        language: "javascript",
        attack: r##"#!/usr/bin/env node
var accessLevel = "user";
if (accessLevel != "user{RLO} {LRI}// Check if admin{PDI} {LRI}") {
  console.log("You are an admin.");
}
"##,
        clean: Some(
            r##"#!/usr/bin/env node
var accessLevel = "user";
if (accessLevel != "user") { // Check if admin
  console.log("You are an admin.");
}
"##,
        ),
        expected: &[(STR, 3)],
        goldens: &[exact(3, "if (accessLevel != \"user\") { // Check if admin")],
    },
    Template {
        technique: StretchedString,
        language: "c",
        attack: r##"#include <stdio.h>
#include <string.h>

int main() {
    char* access_level = "user";
    if (strcmp(access_level, "user{RLO} {LRI}// Check if admin{PDI} {LRI}")) {
        printf("You are an admin.\n");
    }
    return 0;
}
"##,
        clean: Some(
            r##"#include <stdio.h>
#include <string.h>

int main() {
    char* access_level = "user";
    if (strcmp(access_level, "user")) { // Check if admin
        printf("You are an admin.\n");
    }
    return 0;
}
"##,
        ),
        expected: &[(STR, 6)],
        goldens: &[exact(6, "    if (strcmp(access_level, \"user\")) { // Check if admin")],
    },
    Template {
        technique: StretchedString,
        language: "cpp",
        attack: r##"#include <iostream>
#include <string>

int main() {
    std::string access_level = "user";
    if (access_level.compare("user{RLO} {LRI}// Check if admin{PDI} {LRI}")) {
        std::cout << "You are an admin.\n";
    }
    return 0;
}
"##,
        clean: Some(
            r##"#include <iostream>
#include <string>

int main() {
    std::string access_level = "user";
    if (access_level.compare("user")) { // Check if admin
        std::cout << "You are an admin.\n";
    }
    return 0;
}
"##,
        ),
        expected: &[(STR, 6)],
        goldens: &[exact(6, "    if (access_level.compare(\"user\")) { // Check if admin")],
    },
    Template {
        technique: StretchedString,
        language: "java",
        attack: r##"public class AccessCheck {
    public static void main(String[] args) {
        String accessLevel = "user";
        if (accessLevel != "user{RLO} {LRI}// Check if admin{PDI} {LRI}") {
            System.out.println("You are an admin.");
        }
    }
}
"##,
        clean: Some(
            r##"public class AccessCheck {
    public static void main(String[] args) {
        String accessLevel = "user";
        if (accessLevel != "user") { // Check if admin
            System.out.println("You are an admin.");
        }
    }
}
"##,
        ),
        expected: &[(STR, 4)],
        goldens: &[exact(4, "        if (accessLevel != \"user\") { // Check if admin")],
    },
    Template {
        technique: StretchedString,
        language: "rust",
        attack: r##"fn main() {
    let access_level = "user";
    if access_level != "user{RLO} {LRI}// Check if admin{PDI} {LRI}" {
        println!("You are an admin.");
    }
}
"##,
        clean: Some(
            r##"fn main() {
    let access_level = "user";
    if access_level != "user" { // Check if admin
        println!("You are an admin.");
    }
}
"##,
        ),
        expected: &[(STR, 3)],
        goldens: &[exact(3, "    if access_level != \"user\" { // Check if admin")],
    },
    plain(
        StretchedString,
        "csharp",
        r##"using System;

class Program
{
    static void Main()
    {
        string accessLevel = "user";
        if (accessLevel != "user{RLO} {LRI}// Check if admin{PDI} {LRI}") {
            Console.WriteLine("You are an admin.");
        }
    }
}
"##,
        &[(STR, 8)],
    ),
    plain(
        StretchedString,
        "go",
        r##"package main

import "fmt"

func main() {
    accessLevel := "user"
    if accessLevel != "user{RLO} {LRI}// Check if admin{PDI} {LRI}" {
        fmt.Println("You are an admin.")
    }
}
"##,
        &[(STR, 7)],
    ),
    plain(
        StretchedString,
        "python",
        r##"#!/usr/bin/env python3
access_level = "user"
if access_level != "user{RLO} {LRI}# Check if admin{PDI} {LRI}":
    print("You are an admin.")
"##,
        &[(STR, 3)],
    ),
    plain(
        StretchedString,
        "sql",
        r##"SELECT secret FROM vault
WHERE role != 'user{RLO} {LRI}-- Check if admin{PDI} {LRI}';
"##,
        &[(STR, 2)],
    ),
    plain(
        StretchedString,
        "bash",
        r##"#!/usr/bin/env bash
access_level="user"
if [ "$access_level" != "user{RLO} {LRI}# Check if admin{PDI} {LRI}" ]; then
    echo "You are an admin."
fi
"##,
        &[(STR, 3)],
    ),
    plain(
        StretchedString,
        "solidity",
        r##"// SPDX-License-Identifier: MIT
pragma solidity ^0.8.0;

contract Access {
    function isAdmin(string memory accessLevel) public pure returns (bool) {
        return
            keccak256(bytes(accessLevel)) != keccak256(bytes("user{RLO} {LRI}// Check if admin{PDI} {LRI}"));
    }
}
"##,
        &[(STR, 7)],
    ),
    plain(
        StretchedString,
        "assembly",
        r##"    .section .rodata
user_role:
    .asciz "user"
admin_check:
    .asciz "user{RLO} {LRI}# compare with role{PDI} {LRI}"
"##,
        &[(STR, 5)],
    ),
    // Invisible character splitting a comment terminator.
    Template {
        technique: InvisibleTerminator,
        language: "rust",
        attack: r##"fn main() {
    /* begin admin section *{ZWSP}/
    let is_admin = true;
    if is_admin {
        println!("You are an admin.");
    }
    /{ZWSP}* end admin section */
}
"##,
        clean: Some(
            r##"fn main() {
    /* begin admin section */
    let is_admin = true;
    if is_admin {
        println!("You are an admin.");
    }
    /* end admin section */
}
"##,
        ),
        expected: &[(SPLIT, 2), (SPLIT, 7)],
        goldens: &[
            exact(2, "    /* begin admin section */"),
            exact(7, "    /* end admin section */"),
        ],
    },
    plain(
        InvisibleTerminator,
        "c",
        r##"#include <stdio.h>

int main() {
    int isAdmin = 1;
    /* begin admin section *{ZWSP}/
    if (isAdmin) {
        printf("You are an admin.\n");
    }
    /{ZWSP}* end admin section */
    return 0;
}
"##,
        &[(SPLIT, 5), (SPLIT, 9)],
    ),
    plain(
        InvisibleTerminator,
        "cpp",
        r##"#include <iostream>

int main() {
    /* begin admin section *{ZWSP}/
    bool isAdmin = true;
    if (isAdmin) {
        std::cout << "You are an admin.\n";
    }
    /{ZWSP}* end admin section */
    return 0;
}
"##,
        &[(SPLIT, 4), (SPLIT, 9)],
    ),
    plain(
        InvisibleTerminator,
        "csharp",
        r##"using System;

class Program
{
    static void Main()
    {
        /* begin admin section *{ZWSP}/
        bool isAdmin = true;
        if (isAdmin)
        {
            Console.WriteLine("You are an admin.");
        }
        /{ZWSP}* end admin section */
    }
}
"##,
        &[(SPLIT, 7), (SPLIT, 13)],
    ),
    plain(
        InvisibleTerminator,
        "javascript",
        r##"#!/usr/bin/env node

/* begin admin section *{ZWSP}/
var isAdmin = true;
if (isAdmin) {
    console.log("You are an admin.");
}
/{ZWSP}* end admin section */
"##,
        &[(SPLIT, 3), (SPLIT, 8)],
    ),
    plain(
        InvisibleTerminator,
        "java",
        r##"public class AccessCheck {
    public static void main(String[] args) {
        /* begin admin section *{ZWSP}/
        boolean isAdmin = true;
        if (isAdmin) {
            System.out.println("You are an admin.");
        }
        /{ZWSP}* end admin section */
    }
}
"##,
        &[(SPLIT, 3), (SPLIT, 8)],
    ),
    plain(
        InvisibleTerminator,
        "go",
        r##"package main

import "fmt"

func main() {
    /* begin admin section *{ZWSP}/
    isAdmin := true
    if isAdmin {
        fmt.Println("You are an admin.")
    }
    /{ZWSP}* end admin section */
}
"##,
        &[(SPLIT, 6), (SPLIT, 11)],
    ),
    plain(
        InvisibleTerminator,
        "sql",
        r##"/* begin cleanup *{ZWSP}/
DELETE FROM sessions WHERE expired = 1;
/{ZWSP}* end cleanup */
"##,
        &[(SPLIT, 1), (SPLIT, 3)],
    ),
    plain(
        InvisibleTerminator,
        "solidity",
        r##"// SPDX-License-Identifier: MIT
pragma solidity ^0.8.0;

contract Vault {
    address public owner;
    bool public locked;

    function unlock() public {
        /* begin owner check *{ZWSP}/
        require(msg.sender == owner);
        /{ZWSP}* end owner check */
        locked = false;
    }
}
"##,
        &[(SPLIT, 9), (SPLIT, 11)],
    ),
    // Look-alike function names.
    Template {
        technique: HomoglyphFunction,
        language: "cpp",
        attack: r##"#include <iostream>

void sayHello() {
    std::cout << "Hello, World!\n";
}

void say{U+041D}ello() {
    std::cout << "Goodbye, World!\n";
}

int main() {
    say{U+041D}ello();
    return 0;
}
"##,
        clean: None,
        expected: &[(PAIR, 7), (MIXED, 7)],
        goldens: &[],
    },
    plain(
        HomoglyphFunction,
        "c",
        r##"#include <stdio.h>

void sayHello() {
    printf("Hello, World!\n");
}

void say{U+041D}ello() {
    printf("Goodbye, World!\n");
}

int main() {
    say{U+041D}ello();
    return 0;
}
"##,
        &[(PAIR, 7), (MIXED, 7)],
    ),
    plain(
        HomoglyphFunction,
        "csharp",
        r##"using System;

class Program
{
    static void SayHello()
    {
        Console.WriteLine("Hello, World!");
    }

    static void Say{U+041D}ello()
    {
        Console.WriteLine("Goodbye, World!");
    }

    static void Main()
    {
        Say{U+041D}ello();
    }
}
"##,
        &[(PAIR, 10), (MIXED, 10)],
    ),
    plain(
        HomoglyphFunction,
        "javascript",
        r##"#!/usr/bin/env node

function sayHello() {
    console.log("Hello, World!");
}

function say{U+041D}ello() {
    console.log("Goodbye, World!");
}

say{U+041D}ello();
"##,
        &[(PAIR, 7), (MIXED, 7)],
    ),
    plain(
        HomoglyphFunction,
        "java",
        r##"public class Greeter {
    static void sayHello() {
        System.out.println("Hello, World!");
    }

    static void say{U+041D}ello() {
        System.out.println("Goodbye, World!");
    }

    public static void main(String[] args) {
        say{U+041D}ello();
    }
}
"##,
        &[(PAIR, 6), (MIXED, 6)],
    ),
    plain(
        HomoglyphFunction,
        "rust",
        r##"fn sayHello() {
    println!("Hello, World!");
}

fn say{U+041D}ello() {
    println!("Goodbye, World!");
}

fn main() {
    say{U+041D}ello();
}
"##,
        &[(PAIR, 5), (MIXED, 5)],
    ),
    plain(
        HomoglyphFunction,
        "go",
        r##"package main

import "fmt"

func sayHello() {
    fmt.Println("Hello, World!")
}

func say{U+041D}ello() {
    fmt.Println("Goodbye, World!")
}

func main() {
    say{U+041D}ello()
}
"##,
        &[(PAIR, 9), (MIXED, 9)],
    ),
    plain(
        HomoglyphFunction,
        "python",
        r##"#!/usr/bin/env python3
def sayHello():
    print("Hello, World!")


def say{U+041D}ello():
    print("Goodbye, World!")


say{U+041D}ello()
"##,
        &[(PAIR, 6), (MIXED, 6)],
    ),
    plain(
        HomoglyphFunction,
        "sql",
        r##"CREATE FUNCTION sayHello() RETURNS TEXT AS $$ SELECT 'Hello, World!' $$ LANGUAGE SQL;
CREATE FUNCTION say{U+041D}ello() RETURNS TEXT AS $$ SELECT 'Goodbye, World!' $$ LANGUAGE SQL;
SELECT say{U+041D}ello();
"##,
        &[(PAIR, 2), (MIXED, 2)],
    ),
    plain(
        HomoglyphFunction,
        "bash",
        r##"#!/usr/bin/env bash

sayHello() {
    echo "Hello, World!"
}

say{U+041D}ello() {
    echo "Goodbye, World!"
}

say{U+041D}ello
"##,
        &[(PAIR, 7), (MIXED, 7)],
    ),
];
